from core.code import code_from_document, simulate_with_delay
from core.network import build_upper_bounding_network, cut_for_nodes, restrict_wiretap_sets

from cli.schemas import RunConfig, SimulateSummary
from cli.services.storage import write_lines

from .common import load_input, seed_streams
from .verify import load_code_output


def cmd_simulate(config: RunConfig) -> int:
    net, model = load_input(config)
    doc = load_code_output(config).code
    code = code_from_document(doc)
    cut = cut_for_nodes(net, doc.cut)
    sets = [list(wiretap) for wiretap in restrict_wiretap_sets(model, cut)]

    trace = simulate_with_delay(
        code, build_upper_bounding_network(net, cut), config.T, seed=seed_streams(config.seed)["simulate"], sets=sets
    )
    write_lines(list(trace.rounds) + [SimulateSummary.of(config, trace)], config.out)
    return 0
