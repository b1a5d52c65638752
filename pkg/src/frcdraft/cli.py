"""Command-line pipeline: ingest fixtures, build profiles, train, predict,
run drafts, serve the HTTP API, and optionally fetch live event data.

All subcommands are thin wrappers over the library modules; they parse
arguments, move JSON between disk and the core functions, and print short
human-readable summaries. Validation problems exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import draft as draft_mod
from . import optimizer, predictor
from .indicators import AXES, SchemaError, load_year_schema
from .ingest import ValidationError, dataset_integrity_report, load_event
from .profiles import (
    MissingProfileError,
    YearMismatchError,
    build_profiles,
    load_profiles,
    save_profiles,
)


class CliError(Exception):
    """Anything that should terminate the command with exit status 2."""


def _load_events(paths):
    datasets = []
    for p in paths:
        ds = load_event(p)
        if not ds.matches and not ds.skipped:
            raise CliError(f"{p}: no match records found")
        datasets.append(ds)
    return datasets


def _ranking_from_profiles(profiles):
    """Fallback seeding when no ranking file is given: descending radar area
    of each robot's own normalized vector."""
    scored = [
        (-optimizer.radar_area(p.normalized), p.team_id)
        for p in profiles.profiles.values()
    ]
    scored.sort()
    return [team for _, team in scored]


def _load_ranking(path):
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list) or not all(isinstance(t, str) for t in raw):
        raise CliError(f"{path}: ranking must be a JSON array of team id strings")
    return raw


# --- subcommands ----------------------------------------------------------


def cmd_ingest(args):
    report = {"events": []}
    total_ok = total_skipped = 0
    for p in args.paths:
        ds = load_event(p)
        r = dataset_integrity_report(ds)
        total_ok += r.matches
        total_skipped += r.skipped
        report["events"].append(
            {
                "path": str(p),
                "event_key": ds.event_key,
                "year": ds.year,
                "matches": r.matches,
                "teams": r.teams,
                "ties": r.ties,
                "skipped": r.skipped,
                "skip_reasons": [list(s) for s in ds.skipped],
            }
        )
        print(f"{ds.event_key}: {r.matches} matches, {r.teams} teams, "
              f"{r.ties} ties, {r.skipped} skipped")
    if args.out:
        Path(args.out).write_text(json.dumps(report, indent=2), encoding="utf-8")
        print(f"report written to {args.out}")
    if total_ok == 0:
        raise CliError("no valid matches in any input")
    return 0


def cmd_profiles(args):
    schema = load_year_schema(args.schema)
    datasets = _load_events(args.paths)
    if args.scope == "event" and len(datasets) > 1:
        raise CliError("--scope event expects exactly one event; use --scope season to merge")
    if args.year is not None:
        datasets = [ds for ds in datasets if ds.year == args.year]
        if not datasets:
            raise CliError(f"no input events from year {args.year}")
    profiles = build_profiles(datasets, schema)
    out = args.out or f"profiles-{profiles.year}.json"
    save_profiles(profiles, out)
    print(f"{len(profiles.profiles)} robot profiles ({profiles.year}) -> {out}")
    return 0


def cmd_train(args):
    if args.synthetic:
        from .synthetic import synthetic_samples

        samples = synthetic_samples(args.synthetic, seed=args.seed)
        print(f"{len(samples)} synthetic samples")
    else:
        if not args.events or not args.schema:
            raise CliError("need --events and --schema (or --synthetic N)")
        schema = load_year_schema(args.schema)
        datasets = _load_events(args.events)
        profiles = build_profiles(datasets, schema)
        samples, ties = predictor.build_training_set(datasets, profiles)
        print(f"{len(samples)} samples from {len(datasets)} event(s), {ties} ties dropped")
    if len(samples) < 10:
        raise CliError("too few samples to train")

    train_set, test_set = predictor.split_dataset(samples, seed=args.seed)
    if args.grid:
        with open(args.grid, encoding="utf-8") as fh:
            grid = json.load(fh)
        grid["hidden_layers"] = [tuple(h) for h in grid.get("hidden_layers", [])] or None
        grid = {k: v for k, v in grid.items() if v}
        config, report = predictor.grid_search(
            grid, train_set, seed=args.seed, folds=args.folds
        )
        print(f"grid search: {len(report['combinations'])} combinations, "
              f"best mean accuracy {report['best_mean_accuracy']:.4f}")
        if args.report:
            Path(args.report).write_text(json.dumps(report, indent=2), encoding="utf-8")
            print(f"grid report written to {args.report}")
    else:
        config = predictor.ModelConfig(seed=args.seed)

    model = predictor.train(config, train_set)
    test_acc = predictor.accuracy(model, test_set) if test_set else float("nan")
    model.metadata["test_accuracy"] = test_acc
    predictor.save_model(model, args.out)
    print(f"config: hidden={config.hidden_layers} act={config.activation} "
          f"solver={config.solver} alpha={config.alpha} rate={config.learning_rate}")
    print(f"train accuracy {model.metadata['train_accuracy']:.4f}, "
          f"test accuracy {test_acc:.4f} -> {args.out}")
    return 0


def _alliance_vector(profiles, spec_str, name):
    teams = [t.strip() for t in spec_str.split(",") if t.strip()]
    if len(teams) != 3:
        raise CliError(f"--{name} needs exactly 3 comma-separated team ids")
    from .profiles import alliance_effectiveness

    return alliance_effectiveness([profiles[t] for t in teams])


def cmd_predict(args):
    model = predictor.load_model(args.model)
    profiles = load_profiles(args.profiles)
    red = _alliance_vector(profiles, args.red, "red")
    blue = _alliance_vector(profiles, args.blue, "blue")
    proba, label = predictor.predict(model, red, blue)
    print(json.dumps({"probability": proba, "red_wins": bool(label)}))
    return 0


def cmd_draft(args):
    schema = load_year_schema(args.schema)
    datasets = _load_events([args.event])
    profiles = build_profiles(datasets, schema)
    ranking = _load_ranking(args.ranking) if args.ranking else _ranking_from_profiles(profiles)

    if args.mode == "all":
        state = draft_mod.new_draft(ranking, mode=draft_mod.MODE_OPTIMIZE_ALL)
        events = draft_mod.run_optimize_all(state, profiles)
        draft_mod.write_pick_log(events, args.out)
        for a in state.alliances():
            print(f"seat {a['seat']}: {a['captain']} + {', '.join(a['partners'])}")
        print(f"{len(events)} picks -> {args.out}")
        return 0

    if args.mode.startswith("one:"):
        our_team = args.mode.split(":", 1)[1]
        state = draft_mod.new_draft(ranking, mode=draft_mod.MODE_OPTIMIZE_ONE, our_team=our_team)
        try:
            session = draft_mod.OptimizeOneSession(state, our_team, profiles)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        events = _interactive_loop(session, args.top_k)
        draft_mod.write_pick_log(events, args.out)
        print(f"{len(events)} picks -> {args.out}")
        return 0

    raise CliError(f"unknown mode {args.mode!r} (use 'all' or 'one:TEAM')")


def _interactive_loop(session, top_k):
    """Line-oriented pick entry: each stdin line is the team the current
    picker chose; suggestions print automatically on our turns."""
    state = session.state
    events = []
    while not state.is_complete():
        picker = state.current_picker()
        if session.our_turn():
            print(f"-- our pick ({picker}); suggestions:")
            for team, area in session.suggestions(top_k=top_k):
                print(f"     {team}  area={area:.4f}")
        else:
            print(f"-- waiting for {picker}'s pick")
        line = sys.stdin.readline()
        if not line:
            print("input closed; stopping with draft incomplete")
            break
        picked = line.strip()
        if not picked:
            continue
        try:
            events.append(session.enter_pick(picked))
            print(f"   {picker} picked {picked}")
        except draft_mod.IneligiblePickError as exc:
            print(f"   rejected: {exc}")
    return events


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    profiles = load_profiles(args.profiles)
    model = predictor.load_model(args.model) if args.model else None
    ranking = _load_ranking(args.ranking) if args.ranking else _ranking_from_profiles(profiles)
    app = create_app(profiles, ranking, model=model, persist_dir=args.persist_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def cmd_fetch(args):
    from .fetcher import BASE_URL, FetchError, fetch_event_matches

    try:
        matches = fetch_event_matches(args.event, base_url=args.base_url or BASE_URL)
    except FetchError as exc:
        raise CliError(str(exc)) from None
    out = args.out or f"{args.event}.json"
    Path(out).write_text(json.dumps(matches, indent=2), encoding="utf-8")
    print(f"{len(matches)} qualification matches -> {out}")
    return 0


# --- wiring ---------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="frcdraft",
        description="Alliance selection toolkit: indicators, winner prediction, draft assistant.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="validate fixture files and report integrity")
    p.add_argument("paths", nargs="+", help="match fixture files or directories")
    p.add_argument("--out", help="write a JSON integrity report")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("profiles", help="build normalized robot profiles")
    p.add_argument("paths", nargs="+", help="match fixture files or directories")
    p.add_argument("--schema", required=True, help="season schema config JSON")
    p.add_argument("--year", type=int, help="restrict inputs to one season")
    p.add_argument("--scope", choices=["event", "season"], default="event")
    p.add_argument("--out", help="output path (default profiles-<year>.json)")
    p.set_defaults(func=cmd_profiles)

    p = sub.add_parser("train", help="train the winner-prediction model")
    p.add_argument("--events", nargs="+", help="fixture files/dirs for training data")
    p.add_argument("--schema", help="season schema config JSON")
    p.add_argument("--synthetic", type=int, metavar="N", help="train on N synthetic samples")
    p.add_argument("--grid", help="JSON hyperparameter grid; runs cross-validated search")
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="model.json")
    p.add_argument("--report", help="write the grid-search report JSON here")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="win probability for red vs. blue")
    p.add_argument("--model", required=True)
    p.add_argument("--profiles", required=True)
    p.add_argument("--red", required=True, help="3 comma-separated team ids")
    p.add_argument("--blue", required=True, help="3 comma-separated team ids")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("draft", help="run an alliance selection draft")
    p.add_argument("--event", required=True, help="fixture file/dir for the event")
    p.add_argument("--schema", required=True)
    p.add_argument("--mode", required=True, help="'all' or 'one:TEAM'")
    p.add_argument("--ranking", help="JSON array of team ids; default ranks by radar area")
    p.add_argument("--out", default="picks.jsonl", help="pick log output (JSON lines)")
    p.add_argument("--top-k", type=int, default=3)
    p.set_defaults(func=cmd_draft)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--profiles", required=True)
    p.add_argument("--model")
    p.add_argument("--ranking")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--persist-dir", help="directory for session pick logs")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("fetch", help="download event matches (needs TBA_AUTH_KEY)")
    p.add_argument("--event", required=True, help="event key, e.g. 2019paphi")
    p.add_argument("--out")
    p.add_argument("--base-url", default=None)
    p.set_defaults(func=cmd_fetch)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        CliError,
        ValidationError,
        SchemaError,
        YearMismatchError,
        MissingProfileError,
        predictor.FormatVersionError,
        predictor.TooFewSamplesError,
        draft_mod.TooFewTeamsError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
