import logging
import sys

from core.code import code_to_document, construct_code, empirical_failure_rate, exhaustive_secrecy_check
from core.network import build_upper_bounding_network, network_to_document, upper_bounding_wiretap

from cli.schemas import CodeOutput, RunConfig
from cli.services.storage import write_document

from .common import compute_bound, load_input, seed_streams, wiretap_sets


logger = logging.getLogger(__name__)


def cmd_code(config: RunConfig) -> int:
    net, model = load_input(config)
    bound, cut = compute_bound(config, net, model)
    report = bound.argmin
    if bound.bound < 1:
        notice = f"capacity zero at cut {report.cut}, no code emitted"
        print(notice, file=sys.stderr)
        write_document(CodeOutput(config=config, bound=bound.bound, cut=report.cut, notice=notice), config.out)
        return 0

    streams = seed_streams(config.seed)
    code, verdict = construct_code(report, seed=streams["code"], retries=config.retries)
    sets = wiretap_sets(report)

    exhaustive = None
    if code.q ** code.n <= config.enum_cap:
        results = exhaustive_secrecy_check(code, sets, enum_cap=config.enum_cap)
        for record, result in zip(verdict.sets, results):
            record.exhaustive = result
        exhaustive = verdict.secure_exhaustive = all(results)
    else:
        logger.info("q^(x+y) = %d^%d is above the enumeration cap; algebraic verdict only", code.q, code.n)

    failure_rate = None
    if config.trials:
        failure_rate = empirical_failure_rate(report, trials=config.trials, seed=streams["trials"])

    gbar = build_upper_bounding_network(net, cut)
    output = CodeOutput(
        config=config,
        bound=bound.bound,
        cut=report.cut,
        code=code_to_document(code, verdict, sets, cut=report.cut),
        exhaustive=exhaustive,
        failure_rate=failure_rate,
        upper_bounding_network=network_to_document(
            gbar, upper_bounding_wiretap(model, cut), derived={"cut": report.cut}
        ),
    )
    write_document(output, config.out)
    return 0
