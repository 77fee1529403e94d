from cli.schemas import RunConfig
from cli.services.storage import write_document

from .common import compute_bound, load_input


def cmd_bound(config: RunConfig) -> int:
    net, model = load_input(config)
    output, _ = compute_bound(config, net, model)
    write_document(output, config.out)
    return 0
