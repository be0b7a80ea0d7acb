"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Command Line Part
"""

# Libraries
from __future__ import annotations

from typing import Sequence

import argparse
import json
import sys

from Catalog.catalog import catalog_list, resolve_spec
from Catalog.reports import emit_report
from Catalog.verify_suites import SUITES, run_verify_suite
from Engine.hgs_count import count_by_method
from Engine.structure_screen import classify_group, screen_candidate
from Utilities.config_tools import load_settings
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_CLI")

METHODS = ("formula", "byott", "brute", "fpf", "dual")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hgs", description="Count Hopf-Galois structures e(G, N)")
    commands = parser.add_subparsers(dest="command", required=True)

    info = commands.add_parser("info", help="order, structure and order census of a group")
    info.add_argument("-G", "--group", required=True)
    info.add_argument("--json", action="store_true")

    count = commands.add_parser("count", help="compute e(G, N)")
    count.add_argument("-G", "--group", required=True)
    count.add_argument("-N", "--type", required=True)
    count.add_argument("--method", choices=METHODS, default="formula")
    count.add_argument("--checkpoint", default=None, help="checkpoint file written during byott runs")
    count.add_argument("--resume", default=None, help="resume a byott run from this checkpoint")
    count.add_argument("--allow-12", action="store_true", help="let the brute-force oracle run at order 12")
    count.add_argument("--json", action="store_true")

    screen = commands.add_parser("screen", help="screen a candidate N for an almost simple G")
    screen.add_argument("-G", "--group", required=True)
    screen.add_argument("-N", "--type", required=True)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITES, required=True)
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--checkpoint-dir", default=None)

    catalog = commands.add_parser("catalog", help="named group catalog")
    catalog.add_argument("action", choices=("list",))

    history = commands.add_parser("history", help="list recorded count results")
    history.add_argument("-G", "--group", default=None)
    history.add_argument("-N", "--type", default=None)

    serve = commands.add_parser("serve", help="run the HTTP surface")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


# ========== 하위 명령 ==========
def _info(args: argparse.Namespace) -> int:
    group = resolve_spec(args.group)
    payload = {
        "label": group.name,
        "order": group.order,
        "structure": classify_group(group).describe(),
        "order_census": group.order_statistics(),
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"{payload['label']}: order {payload['order']}, {payload['structure']}")
        print("order census: " + ", ".join(f"{k}:{v}" for k, v in sorted(payload["order_census"].items())))
    return 0


def _count(args: argparse.Namespace) -> int:
    G = resolve_spec(args.group)
    N = resolve_spec(args.type)
    allow_12 = args.allow_12 or load_settings().brute_allow_12
    result = count_by_method(G, N, args.method, checkpoint=args.checkpoint, resume=args.resume,
                             allow_12=allow_12)

    if load_settings().record_results:
        # 기록 실패는 계산 결과에 영향을 주지 않음
        import Database
        Database.save_count_result(result)

    print(emit_report([result], "json" if args.json else "table"))
    return 0


def _screen(args: argparse.Namespace) -> int:
    report = screen_candidate(resolve_spec(args.group), resolve_spec(args.type))
    print(json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True))
    return 0


def _verify(args: argparse.Namespace) -> int:
    report = run_verify_suite(args.suite, checkpoint_dir=args.checkpoint_dir)

    if load_settings().record_results:
        import Database
        Database.save_verify_run(report)

    print(emit_report(report, "json" if args.json else "table"))
    return 0 if report.ok else 1


def _catalog(args: argparse.Namespace) -> int:
    for entry in catalog_list():
        print(f"{entry['label']:<12} {entry['description']}")
    return 0


def _history(args: argparse.Namespace) -> int:
    import Database
    rows = Database.get_all_count_results(g_label=args.group, n_label=args.type)
    print(json.dumps(rows, indent=2, default=str))
    return 0


def _serve(args: argparse.Namespace) -> int:
    import uvicorn
    uvicorn.run("main:app", host=args.host, port=args.port)
    return 0


COMMANDS = {
    "info": _info,
    "count": _count,
    "screen": _screen,
    "verify": _verify,
    "catalog": _catalog,
    "history": _history,
    "serve": _serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    """
    hgs 명령 실행
    :param argv: 명령행 인자 (기본값: sys.argv[1:])
    :return: 종료 코드 (0 성공, 1 검사 실패, 2 사용법/파싱 오류, 3 계산 불가)
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_signal:
        return int(exit_signal.code or 0)

    try:
        return COMMANDS[args.command](args)
    except HGSError as error:
        logger.warning(f"{args.command} failed: {error.message}")
        print(json.dumps(error.detail, indent=2), file=sys.stderr)
        return error.exit_code


if __name__ == "__main__":
    sys.exit(main())
