"""Command line entry points: ingest, serve, demo."""
from __future__ import annotations

import argparse
import gzip
import os
import sys
from pathlib import Path

from scholardash.demo import generate_demo_records
from scholardash.ingest import normalize, parse_jsonl_dump, parse_xml_dump
from scholardash.store import Corpus


def _open_input(path: str):
    if path.endswith(".gz"):
        return gzip.open(path, "rb")
    return open(path, "rb")


def cmd_ingest(args: argparse.Namespace) -> int:
    store_path = Path(args.store)
    if args.append and store_path.exists():
        corpus = Corpus.load(store_path)
    else:
        corpus = Corpus()

    errors: list[Exception] = []
    added = replaced = 0
    with _open_input(args.input) as stream:
        if args.format == "xml":
            for raw in parse_xml_dump(stream, errors=errors):
                try:
                    record = normalize(raw)
                except Exception as exc:
                    errors.append(exc)
                    continue
                if corpus.upsert(record):
                    replaced += 1
                else:
                    added += 1
        else:
            for record in parse_jsonl_dump(stream, errors=errors):
                if corpus.upsert(record):
                    replaced += 1
                else:
                    added += 1

    corpus.snapshot(store_path)
    print(f"ingested {added} new, {replaced} replaced, {len(errors)} skipped -> {store_path}")
    for err in errors[:20]:
        print(f"  skipped: {err}", file=sys.stderr)
    if len(errors) > 20:
        print(f"  ... and {len(errors) - 20} more", file=sys.stderr)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from scholardash.api import create_app

    store_path = os.environ.get("CSI_STORE", args.store)
    listen = os.environ.get("CSI_LISTEN", args.listen)
    if store_path is None:
        print("serve: --store (or CSI_STORE) is required", file=sys.stderr)
        return 2
    host, _, port_text = listen.rpartition(":")
    if not host or not port_text.isdigit():
        print(f"serve: bad listen address {listen!r}, expected host:port", file=sys.stderr)
        return 2

    corpus = Corpus.load(store_path)
    state_dir = Path(str(store_path) + ".d")
    static_dir = args.static if args.static and Path(args.static).is_dir() else None
    app = create_app(corpus, workers=args.workers, state_dir=state_dir, static_dir=static_dir)
    print(f"serving {len(corpus)} records from {store_path} on {host}:{port_text}")
    uvicorn.run(app, host=host, port=int(port_text), log_level="warning")
    return 0


def cmd_demo(args: argparse.Namespace) -> int:
    corpus = Corpus()
    for record in generate_demo_records(n_records=args.records, seed=args.seed):
        corpus.upsert(record)
    corpus.snapshot(args.store)
    print(f"wrote demo store with {len(corpus)} records -> {args.store}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scholardash")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="parse a dump into a store snapshot")
    p_ingest.add_argument("--input", required=True, help="dump file (.xml, .jsonl, optionally .gz)")
    p_ingest.add_argument("--format", required=True, choices=("xml", "jsonl"))
    p_ingest.add_argument("--store", required=True, help="store snapshot path")
    p_ingest.add_argument("--append", action="store_true", help="load the existing store first")
    p_ingest.set_defaults(fn=cmd_ingest)

    p_serve = sub.add_parser("serve", help="serve the REST API")
    p_serve.add_argument("--store", help="store snapshot path (env CSI_STORE overrides)")
    p_serve.add_argument("--listen", default="127.0.0.1:8000", help="host:port (env CSI_LISTEN overrides)")
    p_serve.add_argument("--workers", type=int, default=2, help="topic-training worker threads")
    p_serve.add_argument("--static", help="optional directory with the built UI to mount at /")
    p_serve.set_defaults(fn=cmd_serve)

    p_demo = sub.add_parser("demo", help="write a seeded demo store")
    p_demo.add_argument("--store", required=True)
    p_demo.add_argument("--records", type=int, default=300)
    p_demo.add_argument("--seed", type=int, default=7)
    p_demo.set_defaults(fn=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
