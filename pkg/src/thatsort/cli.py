"""Command-line interface.

Subcommands map one-to-one onto the library operations: validate, emulate,
eval-deps, freq, relabel, train, tag, eval-tags, curve, inventory, distance.
File outputs are written atomically and every run with file outputs leaves a
deterministic run-manifest (command, options, input digests, tool version)
beside them, so any report can be traced back to exact corpus bytes.

Exit codes: 0 success, 1 data error, 2 usage error. THATSORT_DATA_DIR serves
as a fallback root for input paths that do not resolve from the cwd.
"""

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from ._util import atomic_write_text
from .analysis import (
    SizeSchedule,
    curve_to_csv,
    distances_to_csv,
    inventory_to_csv,
    learning_curve,
    summarize_distances,
    tag_inventory_evolution,
    that_noun_distance,
)
from .corpus_io import (
    load_gold_that,
    parse_conllu,
    parse_slash_tagged,
    serialize_conllu,
    serialize_slash_tagged,
)
from .deps_emulation import emulate_document, evaluate_deps, frequency_stats
from .dt_tagger import TrainParams, load_model, save_model, tag, tag_document, train
from .errors import ThatsortError
from .relabeler import RelabelPolicy, relabel_that, tag_count_report, traces_to_csv


class UsageError(Exception):
    pass


def _resolve_input(path):
    candidate = Path(path)
    if candidate.is_file():
        return candidate
    root = os.environ.get("THATSORT_DATA_DIR")
    if root:
        fallback = Path(root) / path
        if fallback.is_file():
            return fallback
    raise UsageError("input not found: %s" % path)


def _sha256(path):
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _detect_format(path, fmt):
    if fmt != "auto":
        return fmt
    return "conllu" if Path(path).suffix == ".conllu" else "slash"


def _load(path, fmt="auto"):
    path = _resolve_input(path)
    text = path.read_text(encoding="utf-8")
    kind = _detect_format(path, fmt)
    if kind == "conllu":
        return parse_conllu(text, source_name=str(path))
    return parse_slash_tagged(text, source_name=str(path))


def _write_manifest(args, inputs, outputs, metadata=None):
    if not outputs:
        return
    manifest = {
        "tool": "thatsort",
        "version": __version__,
        "command": args.command,
        "options": {
            k: v
            for k, v in sorted(vars(args).items())
            if k not in ("command", "func") and not callable(v)
        },
        "seed": args.seed,
        "inputs": [{"path": str(p), "sha256": _sha256(p)} for p in inputs],
        "outputs": [str(o) for o in outputs],
        "metadata": metadata or {},
    }
    target = Path(str(outputs[0]) + ".manifest.json")
    atomic_write_text(target, json.dumps(manifest, indent=2, sort_keys=True, default=str) + "\n")


def _emit(args, text, inputs, metadata=None):
    """Write text to args.out atomically (or stdout when out is None)."""
    if getattr(args, "out", None):
        atomic_write_text(args.out, text)
        _write_manifest(args, inputs, [args.out], metadata)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    failures = 0
    for raw in args.paths:
        path = _resolve_input(raw)
        text = path.read_text(encoding="utf-8")
        if not text.strip():
            print("%s: warning: empty file" % path)
            continue
        kind = _detect_format(path, args.format)
        try:
            if kind == "conllu":
                parse_conllu(text, source_name=str(path))
            else:
                parse_slash_tagged(text, source_name=str(path))
            print("%s: ok" % path)
        except ThatsortError as exc:
            failures += 1
            print("%s: %s: %s" % (path, type(exc).__name__, exc))
    return 1 if failures else 0


def cmd_emulate(args):
    src = _resolve_input(args.input)
    doc = _load(src, "conllu")
    atomic_write_text(args.out, serialize_conllu(emulate_document(doc)))
    _write_manifest(args, [src], [args.out])
    return 0


def cmd_eval_deps(args):
    pred_path = _resolve_input(args.predicted)
    ref_path = _resolve_input(args.reference)
    labels = tuple(args.labels.split(","))
    report = evaluate_deps(_load(pred_path, "conllu"), _load(ref_path, "conllu"), labels)
    _emit(args, report.to_csv(), [pred_path, ref_path])
    return 0


def cmd_freq(args):
    paths = [_resolve_input(p) for p in args.inputs]
    labels = tuple(args.labels.split(","))
    table = frequency_stats([_load(p, args.format) for p in paths], labels)
    _emit(args, table.to_csv(), paths, {"total_tokens": table.total_tokens})
    return 0


def cmd_relabel(args):
    src = _resolve_input(args.input)
    policy = RelabelPolicy(strict=args.strict, window=args.window)
    doc, traces = relabel_that(_load(src, "conllu"), policy)
    atomic_write_text(args.out, serialize_conllu(doc))
    outputs = [args.out]
    if args.traces:
        atomic_write_text(args.traces, traces_to_csv(traces))
        outputs.append(args.traces)
    _write_manifest(args, [src], outputs, {"changes": len(traces)})
    return 0


def _train_params(args):
    return TrainParams(
        min_leaf=args.min_leaf,
        gain_threshold=args.gain_threshold,
        suffix_len=args.suffix_len,
        smoothing=args.smoothing,
        case_normalize=not args.no_case_normalize,
    )


def cmd_train(args):
    paths = [_resolve_input(p) for p in args.inputs]
    corpus = [_load(p, args.format) for p in paths]
    model = train(corpus, _train_params(args))
    save_model(model, args.model_out)
    _write_manifest(args, paths, [args.model_out], {"tagset_size": len(model.tagset)})
    return 0


def cmd_tag(args):
    model_path = _resolve_input(args.model)
    src = _resolve_input(args.input)
    model = load_model(model_path)
    kind = args.format
    if kind == "auto":
        kind = "conllu" if Path(src).suffix == ".conllu" else "slash"
    if kind == "text":
        lines = src.read_text(encoding="utf-8").splitlines()
        out_lines = []
        for line in lines:
            forms = line.split()
            if not forms:
                continue
            out_lines.append(" ".join("%s/%s" % (f, t) for f, t in zip(forms, tag(model, forms))))
        text = "\n".join(out_lines) + ("\n" if out_lines else "")
    else:
        doc = _load(src, kind)
        tagged = tag_document(model, doc)
        text = serialize_conllu(tagged) if kind == "conllu" else serialize_slash_tagged(tagged)
    atomic_write_text(args.out, text)
    _write_manifest(args, [model_path, src], [args.out])
    return 0


def cmd_eval_tags(args):
    tagged_path = _resolve_input(args.tagged)
    gold_path = _resolve_input(args.gold)
    tagged = _load(tagged_path, args.format)
    gold = load_gold_that(_load(gold_path, args.format))
    report = tag_count_report(tagged, gold, equate_wdt_wpr=args.equate_wdt_wpr)
    _emit(args, report.to_csv(), [tagged_path, gold_path])
    return 0


def _ordered_train_files(args):
    root = Path(args.train_dir)
    if not root.is_dir():
        fallback = os.environ.get("THATSORT_DATA_DIR")
        if fallback and (Path(fallback) / args.train_dir).is_dir():
            root = Path(fallback) / args.train_dir
        else:
            raise UsageError("training directory not found: %s" % args.train_dir)
    paths = sorted(p for p in root.iterdir() if p.is_file())
    if not paths:
        raise UsageError("no training files in %s" % root)
    return paths


def _parse_schedule(text):
    try:
        return SizeSchedule(tuple(int(x) for x in text.split(",")))
    except ValueError as exc:
        raise UsageError("bad schedule %r: %s" % (text, exc)) from exc


def cmd_curve(args):
    train_paths = _ordered_train_files(args)
    schedule = _parse_schedule(args.schedule)
    tests = []
    test_paths = []
    for item in args.test:
        name, _, path = item.partition("=")
        if not path:
            raise UsageError("--test needs name=path, got %r" % item)
        path = _resolve_input(path)
        test_paths.append(path)
        doc = _load(path, "conllu")
        tests.append((name, doc, load_gold_that(doc)))
    if not tests:
        raise UsageError("at least one --test name=path is required")
    corpus = [_load(p, args.format) for p in train_paths]
    rows = learning_curve(corpus, schedule, tests, _train_params(args),
                          equate_wdt_wpr=args.equate_wdt_wpr)
    _emit(args, curve_to_csv(rows), train_paths + test_paths,
          {"file_order": [p.name for p in train_paths]})
    return 0


def cmd_inventory(args):
    train_paths = _ordered_train_files(args)
    schedule = _parse_schedule(args.schedule)
    corpus = [_load(p, args.format) for p in train_paths]
    rows = tag_inventory_evolution(corpus, schedule)
    _emit(args, inventory_to_csv(rows), train_paths,
          {"file_order": [p.name for p in train_paths]})
    return 0


def cmd_distance(args):
    src = _resolve_input(args.input)
    doc = _load(src, "conllu")
    records, skipped = that_noun_distance(doc, "from_%s" % args.source)
    _emit(args, distances_to_csv(records), [src], {"skipped": skipped})
    if records:
        summary = summarize_distances(records)
        for clause_type in sorted(summary):
            stats = summary[clause_type]
            print(
                "%s: count=%d min=%g q1=%g median=%g q3=%g max=%g"
                % (clause_type, stats["count"], stats["min"], stats["q1"],
                   stats["median"], stats["q3"], stats["max"]),
                file=sys.stderr,
            )
    print("skipped=%d" % skipped, file=sys.stderr)
    return 0


def _add_train_params(sub):
    sub.add_argument("--min-leaf", type=int, default=10)
    sub.add_argument("--gain-threshold", type=float, default=0.01)
    sub.add_argument("--suffix-len", type=int, default=5)
    sub.add_argument("--smoothing", type=float, default=0.1)
    sub.add_argument("--no-case-normalize", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="thatsort",
        description="Separate relative-clause and noun-complement 'that' in treebanks.",
    )
    parser.add_argument("--version", action="version", version="thatsort %s" % __version__)
    parser.add_argument("--seed", type=int, default=42,
                        help="recorded in run manifests; reserved for sampling options")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse files and report problems")
    p.add_argument("paths", nargs="+")
    p.add_argument("--format", choices=("auto", "conllu", "slash"), default="auto")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("emulate", help="reconstruct the deps column (with acl:that)")
    p.add_argument("input")
    p.add_argument("out")
    p.set_defaults(func=cmd_emulate)

    p = sub.add_parser("eval-deps", help="score a reconstructed deps column")
    p.add_argument("predicted")
    p.add_argument("reference")
    p.add_argument("--labels", default="acl:that,acl:relcl")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval_deps)

    p = sub.add_parser("freq", help="label frequencies per 1000 tokens")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--labels", default="acl:that,acl:relcl")
    p.add_argument("--format", choices=("auto", "conllu", "slash"), default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("relabel", help="retag clause-introducing 'that' as CST/WPR")
    p.add_argument("input")
    p.add_argument("out")
    p.add_argument("--strict", action="store_true", help="only IN may be retagged")
    p.add_argument("--window", type=int, default=None,
                   help="scan at most K tokens back from the clause verb")
    p.add_argument("--traces", help="write a CSV of every change")
    p.set_defaults(func=cmd_relabel)

    p = sub.add_parser("train", help="train a tagger model")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--model-out", required=True)
    p.add_argument("--format", choices=("auto", "conllu", "slash"), default="auto")
    _add_train_params(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("tag", help="tag a corpus with a trained model")
    p.add_argument("model")
    p.add_argument("input")
    p.add_argument("out")
    p.add_argument("--format", choices=("auto", "conllu", "slash", "text"), default="auto")
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("eval-tags", help="per-tag counts and recall over gold 'that'")
    p.add_argument("tagged")
    p.add_argument("gold")
    p.add_argument("--equate-wdt-wpr", action="store_true")
    p.add_argument("--format", choices=("auto", "conllu", "slash"), default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval_tags)

    p = sub.add_parser("curve", help="learning curve over growing training prefixes")
    p.add_argument("train_dir")
    p.add_argument("--schedule", default="10,30,100,200,300,400,500")
    p.add_argument("--test", action="append", default=[], metavar="NAME=PATH")
    p.add_argument("--format", choices=("auto", "conllu", "slash"), default="auto")
    p.add_argument("--equate-wdt-wpr", action="store_true")
    p.add_argument("--out")
    _add_train_params(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("inventory", help="tag-count evolution over training prefixes")
    p.add_argument("train_dir")
    p.add_argument("--schedule", default="10,30,100,200,300,400,500")
    p.add_argument("--format", choices=("auto", "conllu", "slash"), default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_inventory)

    p = sub.add_parser("distance", help="'that' to preceding-noun distances")
    p.add_argument("input")
    p.add_argument("--source", choices=("deprel", "xpos"), default="deprel")
    p.add_argument("--out")
    p.set_defaults(func=cmd_distance)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: usage: %s" % exc, file=sys.stderr)
        return 2
    except ThatsortError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
