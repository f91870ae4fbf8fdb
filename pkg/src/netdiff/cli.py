"""Command-line front end: netdiff <subcommand> [flags].

Pipelines: ingest -> metrics / compare / cluster / ablate / render, all
speaking the CSV/JSON formats defined in the io module.  Exit codes: 0 on
success, 1 on a domain error (error name on stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import io as io_mod
from .cluster import cluster_composition, louvain
from .compare import compare
from .errors import NetdiffError, UnknownLabel
from .graph import remove_node
from .ingest import count_mentions, default_aliases, load_corpus, symmetrize
from .metrics import metrics_all
from .render import RenderOptions, metrics_table, to_dot


class _UsageError(Exception):
    """Bad flag combination; maps to exit code 2."""


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_ingest(args: argparse.Namespace) -> None:
    corpus = load_corpus(args.profiles)
    aliases = io_mod.read_alias_table(args.aliases) if args.aliases else {}
    universe = set(corpus)
    external: set[str] = set()
    if args.nodes:
        labels, _ = io_mod.read_node_table(args.nodes)
        external = set(labels) - set(corpus)
        universe |= set(labels)
    # universe nodes without profiles are still matchable by their own name
    aliases = {**default_aliases(sorted(external)), **aliases}
    counts = count_mentions(corpus, aliases, external=external)
    net = symmetrize(counts, sorted(universe))
    _emit(io_mod.edge_list_csv(net), args.out)
    if args.out:
        out = Path(args.out)
        counts_path = out.with_name(out.stem + ".counts.csv")
        counts_path.write_text(io_mod.counts_csv(counts), encoding="utf-8")


def _cmd_metrics(args: argparse.Namespace) -> None:
    net = io_mod.load_network(args.edges, args.nodes)
    rows = metrics_all(net, workers=os.cpu_count() or 1)
    _emit(metrics_table(rows, fmt="csv"), args.out)


def _cmd_compare(args: argparse.Namespace) -> None:
    net_a = io_mod.load_network(args.a)
    net_b = io_mod.load_network(args.b)
    report = compare(net_a, net_b)
    if args.json:
        _emit(io_mod.comparison_json(report), args.out)
    else:
        _emit(io_mod.comparison_table(report), args.out)


def _cmd_cluster(args: argparse.Namespace) -> None:
    net = io_mod.load_network(args.edges, args.nodes)
    partition = louvain(net, resolution=args.resolution)
    text = io_mod.partition_json(partition)
    if args.attribute:
        if not args.attrs:
            raise _UsageError("--attribute requires --attrs")
        _, attrs = io_mod.read_node_table(args.attrs)
        composition = cluster_composition(
            partition, attrs, args.attribute
        )
        payload = json.loads(text)
        payload["composition"] = {str(cid): hist for cid, hist in composition.items()}
        text = json.dumps(payload, indent=2) + "\n"
    _emit(text, args.out)


def _cmd_ablate(args: argparse.Namespace) -> None:
    net = io_mod.load_network(args.edges, args.nodes)
    for label in args.remove:
        net = remove_node(net, label)
    _emit(io_mod.edge_list_csv(net), args.out)


def _cmd_render(args: argparse.Namespace) -> None:
    net = io_mod.load_network(args.edges, args.nodes)
    partition = io_mod.read_partition(args.clusters) if args.clusters else None
    unknown = [
        label
        for label in (partition.assignment if partition else {})
        if label not in net
    ]
    if unknown:
        raise UnknownLabel(f"partition labels not in network: {unknown}")
    opts = RenderOptions(color_by_partition=partition)
    _emit(to_dot(net, opts), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netdiff",
        description="Build, measure, compare, cluster, and render weighted "
        "co-mention networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="count mentions in a profile corpus")
    p.add_argument("--profiles", required=True, help="directory of <label>.txt files")
    p.add_argument("--aliases", help="JSON map of label to match strings")
    p.add_argument("--nodes", help="node CSV declaring the full universe")
    p.add_argument("--out", help="edge CSV path (stdout if omitted); the "
                   "raw counts land alongside as <out-stem>.counts.csv")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("metrics", help="per-node centralities as CSV")
    p.add_argument("--edges", required=True)
    p.add_argument("--nodes", help="node CSV adding isolated nodes")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("compare", help="similarity metrics between two networks")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("cluster", help="Louvain communities as JSON")
    p.add_argument("--edges", required=True)
    p.add_argument("--nodes", help="node CSV adding isolated nodes")
    p.add_argument("--resolution", type=float, default=1.0)
    p.add_argument("--attrs", help="node CSV carrying attribute columns")
    p.add_argument("--attribute", help="attribute to histogram per community")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_cluster)

    p = sub.add_parser("ablate", help="remove nodes, write the subnetwork")
    p.add_argument("--edges", required=True)
    p.add_argument("--nodes", help="node CSV adding isolated nodes")
    p.add_argument("--remove", action="append", required=True,
                   help="label to remove (repeatable)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_ablate)

    p = sub.add_parser("render", help="emit a DOT diagram")
    p.add_argument("--edges", required=True)
    p.add_argument("--nodes", help="node CSV adding isolated nodes")
    p.add_argument("--clusters", help="partition JSON for community colors")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_render)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        args.func(args)
    except NetdiffError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, _UsageError) as exc:
        print(f"{type(exc).__name__.lstrip('_')}: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
