"""Helpers shared by the subcommands: input loading, cut selection and seed streams."""

import logging
from typing import List, Tuple

import numpy as np

from core.bound import CutBoundReport, annotate_k_b, best_bound, cut_bound
from core.network import (
    Cut,
    Network,
    UniformWiretap,
    WiretapModel,
    cut_for_nodes,
    load_network,
    restrict_wiretap_sets,
)

from cli.schemas import BoundOutput, RunConfig


logger = logging.getLogger(__name__)

# spawn order is fixed: new stages go at the end
STREAMS = ("rankmax", "code", "trials", "simulate")


def seed_streams(seed: int) -> dict:
    children = np.random.SeedSequence(seed).spawn(len(STREAMS))
    return dict(zip(STREAMS, children))


def load_input(config: RunConfig) -> Tuple[Network, WiretapModel]:
    return load_network(config.input)


def compute_bound(config: RunConfig, net: Network, model: WiretapModel) -> Tuple[BoundOutput, Cut]:
    """Bound at the requested cut, or the minimum over all cuts."""
    seed = seed_streams(config.seed)["rankmax"]
    if config.cut:
        cut = cut_for_nodes(net, config.cut)
        report = cut_bound(cut, restrict_wiretap_sets(model, cut), q=config.q, seed=seed,
                           retries=config.retries, node_order=net.nodes)
        if isinstance(model, UniformWiretap):
            annotate_k_b(report, model.z)
        return BoundOutput(config=config, bound=report.bound, raw_bound=report.raw_bound, argmin=report), cut
    best = best_bound(net, model, q=config.q, seed=seed, node_cap=config.node_cap, retries=config.retries)
    cut = cut_for_nodes(net, best.argmin.cut)
    return BoundOutput(config=config, bound=best.value, raw_bound=best.raw, argmin=best.argmin, best=best), cut


def wiretap_sets(report: CutBoundReport) -> List[List[str]]:
    return [list(record.edges) for record in report.records]
