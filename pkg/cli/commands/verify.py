from pathlib import Path

from pydantic import ValidationError

from core.code import code_from_document, exhaustive_secrecy_check, verify_code
from core.errors import InputError, ParseError
from core.network import cut_for_nodes, restrict_wiretap_sets

from cli.schemas import CodeOutput, RunConfig, VerifyOutput
from cli.services.storage import write_document

from .common import load_input


def load_code_output(config: RunConfig) -> CodeOutput:
    if not config.code:
        raise InputError(f"`{config.subcommand}` needs --code <file written by the code subcommand>")
    path = Path(config.code)
    try:
        output = CodeOutput.model_validate_json(path.read_bytes())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(first["msg"], field=".".join(str(part) for part in first["loc"])) from exc
    if output.code is None:
        raise InputError(f"{path} holds no code ({output.notice})")
    return output


def cmd_verify(config: RunConfig) -> int:
    net, model = load_input(config)
    doc = load_code_output(config).code
    code = code_from_document(doc)
    sets = [list(wiretap) for wiretap in restrict_wiretap_sets(model, cut_for_nodes(net, doc.cut))]

    verdict = verify_code(code, sets)
    mode = "algebraic-only"
    if code.q ** code.n <= config.enum_cap:
        mode = "exhaustive"
        results = exhaustive_secrecy_check(code, sets, enum_cap=config.enum_cap)
        for record, result in zip(verdict.sets, results):
            record.exhaustive = result
        verdict.secure_exhaustive = all(results)
    secure = verdict.secure_algebraic and verdict.secure_exhaustive is not False

    write_document(
        VerifyOutput(
            config=config,
            mode=mode,
            secure=secure,
            decodable=verdict.decodable,
            failing_sets=verdict.failing_sets,
            verdict=verdict,
        ),
        config.out,
    )
    return 0
