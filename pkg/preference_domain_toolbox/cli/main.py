"""
Command line surface.

Exit codes: 0 on PASS / success, 1 on FAIL or an unmet precondition, 2 on usage, parse or
argument errors, 3 when a request exceeds a configured bound. Reports go to stdout, logs and
error messages to stderr.
"""

import argparse
import functools
import sys
from itertools import islice

from preference_domain_toolbox.bijection import profile_to_ssyt, ssyt_to_profile
from preference_domain_toolbox.canonical import canonicalize
from preference_domain_toolbox.config import ToolboxConfig, load_config
from preference_domain_toolbox.core import Axis, PreferenceProfile
from preference_domain_toolbox.documents import (
    format_axis,
    format_profile,
    format_relabeling,
    format_tableau,
    format_witness,
    read_document,
)
from preference_domain_toolbox.domain_logging import get_logger, set_level_for_all, set_type_for_all
from preference_domain_toolbox.enumeration import (
    count_narcissistic,
    count_profiles,
    count_scn,
    count_spn,
    enumerate_scn,
    enumerate_spn,
)
from preference_domain_toolbox.exceptions import (
    DocumentParseError,
    InvalidArgumentError,
    PreconditionViolatedError,
    PreferenceDomainError,
    ResourceBoundError,
)
from preference_domain_toolbox.oracle import run_verification, verification_frame
from preference_domain_toolbox.recognition import (
    RecognitionResult,
    check_single_crossing,
    check_single_peaked,
    is_narcissistic,
    is_single_crossing_wrt,
    is_single_peaked_wrt,
    non_narcissistic_voters,
)
from preference_domain_toolbox.tableaux import count_ssyt_closed, enumerate_ssyt

logger = get_logger("cli")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

PROPERTIES = ("narcissistic", "sp", "sc", "spn", "scn")


def cli_safe(in_func):
    """Logs unexpected errors of a command handler with their traceback, then re-raises."""

    @functools.wraps(in_func)
    def wrapper(*args, **kwargs):
        try:
            return in_func(*args, **kwargs)
        except PreferenceDomainError:
            raise
        except Exception as e:
            logger.error(f"[{in_func.__name__}] Unexpected error: {e}", exc_info=True)
            raise

    return wrapper


def _emit(text: str = "") -> None:
    sys.stdout.write(text)


def _report(passed: bool, details: list[str]) -> int:
    _emit("PASS\n" if passed else "FAIL\n")
    for line in details:
        _emit(line + "\n")
    return EXIT_PASS if passed else EXIT_FAIL


def _result_details(result: RecognitionResult, axis_label: str) -> list[str]:
    if result.holds:
        return [f"{axis_label}: {format_axis(result.axis)}"] if result.axis is not None else []
    if result.witness is not None:
        return [f"witness: {format_witness(result.witness)}"]
    return []


@cli_safe
def _check(args: argparse.Namespace, config: ToolboxConfig) -> int:
    profile: PreferenceProfile = read_document(args.file, kind="profile")
    prop = args.property
    details = []
    narcissistic = True
    if prop in ("narcissistic", "spn", "scn"):
        narcissistic = is_narcissistic(profile)
        if not narcissistic:
            voters = ",".join(str(v) for v in non_narcissistic_voters(profile))
            details.append(f"voters not ranking themselves first: {voters}")
        if prop == "narcissistic" or not narcissistic:
            return _report(narcissistic, details)

    single_peaked = prop in ("sp", "spn")
    if args.axis is not None:
        axis = Axis.parse(args.axis)
        holds = is_single_peaked_wrt(profile, axis) if single_peaked else is_single_crossing_wrt(profile, axis)
        return _report(holds, details)

    if single_peaked:
        result = check_single_peaked(profile, config=config)
        return _report(result.holds, _result_details(result, "axis"))
    result = check_single_crossing(profile)
    return _report(result.holds, _result_details(result, "voter order"))


@cli_safe
def _count(args: argparse.Namespace, config: ToolboxConfig) -> int:
    counters = {
        "spn": count_spn,
        "scn": count_scn,
        "ssyt": count_ssyt_closed,
        "narcissistic": count_narcissistic,
        "profiles": count_profiles,
    }
    _emit(f"{counters[args.family](args.n)}\n")
    return EXIT_PASS


@cli_safe
def _enumerate(args: argparse.Namespace, config: ToolboxConfig) -> int:
    limits = {
        "spn": config.spn_enumeration_limit,
        "scn": config.scn_enumeration_limit,
        "ssyt": config.ssyt_enumeration_limit,
    }
    if args.n > limits[args.family]:
        raise ResourceBoundError(f"enumerate {args.family} is limited to n <= {limits[args.family]} (got n={args.n}).")
    match args.family:
        case "spn":
            stream = map(format_profile, enumerate_spn(args.n, config=config))
        case "scn":
            stream = map(format_profile, enumerate_scn(args.n, config=config))
        case _:
            stream = map(format_tableau, enumerate_ssyt(args.n))
    if args.limit is not None:
        stream = islice(stream, args.limit)

    if args.count_only:
        _emit(f"{sum(1 for _ in stream)}\n")
        return EXIT_PASS
    for index, document in enumerate(stream):
        if index:
            _emit("\n")
        _emit(document)
    return EXIT_PASS


@cli_safe
def _map(args: argparse.Namespace, config: ToolboxConfig) -> int:
    if args.direction == "to-ssyt":
        _emit(format_tableau(profile_to_ssyt(read_document(args.file, kind="profile"))))
    else:
        _emit(format_profile(ssyt_to_profile(read_document(args.file, kind="tableau"))))
    return EXIT_PASS


@cli_safe
def _canonicalize(args: argparse.Namespace, config: ToolboxConfig) -> int:
    canonical, relabeling = canonicalize(read_document(args.file, kind="profile"), config=config)
    _emit(format_profile(canonical))
    _emit(format_relabeling(relabeling))
    return EXIT_PASS


@cli_safe
def _verify(args: argparse.Namespace, config: ToolboxConfig) -> int:
    results = run_verification(args.n, with_oracle=args.oracle, config=config, progress=args.progress)
    _emit(verification_frame(results).to_string(index=False) + "\n")
    return EXIT_PASS if all(result.passed for result in results) else EXIT_FAIL


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preference-domain",
        description="Recognize, count and enumerate single-peaked and single-crossing narcissistic profiles.",
    )
    parser.add_argument("--config", default=None, help="YAML file overriding the desk-scale bounds.")
    parser.add_argument("--verbose", action="store_true", help="Debug logging and progress records on stderr.")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Check a profile document for a property.")
    check.add_argument("file")
    check.add_argument("--axis", default=None, help="Fixed axis (or voter order for sc), e.g. 2,1,3,4.")
    check.add_argument("--property", choices=PROPERTIES, default="sp")
    check.set_defaults(handler=_check)

    count = commands.add_parser("count", help="Print an exact count.")
    count.add_argument("family", choices=["spn", "scn", "ssyt", "narcissistic", "profiles"])
    count.add_argument("--n", type=int, required=True)
    count.set_defaults(handler=_count)

    enumerate_command = commands.add_parser("enumerate", help="Stream canonical profiles or tableaux.")
    enumerate_command.add_argument("family", choices=["spn", "scn", "ssyt"])
    enumerate_command.add_argument("--n", type=int, required=True)
    enumerate_command.add_argument("--limit", type=_non_negative, default=None)
    enumerate_command.add_argument("--count-only", action="store_true")
    enumerate_command.set_defaults(handler=_enumerate)

    map_command = commands.add_parser("map", help="Apply the profile/tableau bijection.")
    map_command.add_argument("direction", choices=["to-ssyt", "to-profile"])
    map_command.add_argument("file")
    map_command.set_defaults(handler=_map)

    canonical = commands.add_parser("canonicalize", help="Relabel an SPN profile into canonical form.")
    canonical.add_argument("file")
    canonical.set_defaults(handler=_canonicalize)

    verify = commands.add_parser("verify", help="Cross-check counts, enumerations and round trips.")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--oracle", action="store_true", help="Include the brute-force comparison.")
    verify.add_argument("--progress", action="store_true", help="Show a progress bar for the oracle.")
    verify.set_defaults(handler=_verify)
    return parser


def main(argv: list[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_PASS if exit_request.code in (0, None) else EXIT_USAGE

    if args.verbose:
        set_type_for_all("verbose")
        set_level_for_all("DEBUG")

    try:
        config = load_config(args.config)
        return args.handler(args, config)
    except (DocumentParseError, InvalidArgumentError) as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_USAGE
    except PreconditionViolatedError as error:
        _emit(f"FAIL\n{error}\n")
        return EXIT_FAIL
    except ResourceBoundError as error:
        sys.stderr.write(f"refused: {error}\n")
        return EXIT_RESOURCE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
