#!/usr/bin/env python3
"""Benchmark the compiled Viterbi kernel against the pure-Python fallback.

Trains a tagger on the bundled Brown-style fixture, decodes the same batch of
sentences with both kernels, verifies the outputs are identical, and prints
tokens/second for each plus the speedup.

Usage: python benchmarks/bench_decode.py [--files N] [--sentences N]
"""

import argparse
import time

import numpy as np

from thatsort import parse_slash_tagged
from thatsort.dt_tagger import train
from thatsort.dt_tagger import _viterbi_py
from thatsort.dt_tagger.decode import compiled

try:
    from thatsort.dt_tagger import _viterbi_c
except ImportError:
    _viterbi_c = None

from thatsort.synth import brown_slash_files


def sentence_batches(model, docs, limit):
    tables = compiled(model)
    batches = []
    n_tokens = 0
    for doc in docs:
        for sent in doc.sentences:
            forms = [t.form for t in sent.tokens]
            offs = [0]
            tags = []
            logs = []
            for form in forms:
                ids, lps = tables.candidates(form)
                tags.extend(ids.tolist())
                logs.extend(lps.tolist())
                offs.append(len(tags))
            batches.append((
                np.asarray(offs, dtype=np.int32),
                np.asarray(tags, dtype=np.int32),
                np.asarray(logs, dtype=np.float64),
            ))
            n_tokens += len(forms)
            if len(batches) >= limit:
                return batches, n_tokens
    return batches, n_tokens


def run(kernel, batches, tables):
    start = time.perf_counter()
    outputs = [
        kernel.viterbi_path(offs, tags, logs, tables.leaf_index,
                            tables.leaf_logdist, tables.boundary)
        for offs, tags, logs in batches
    ]
    return time.perf_counter() - start, outputs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--files", type=int, default=40)
    parser.add_argument("--sentences", type=int, default=4000)
    args = parser.parse_args()

    texts = brown_slash_files(max(args.files, 10))
    docs = [parse_slash_tagged(t) for t in texts[: args.files]]
    model = train(docs)
    tables = compiled(model)
    batches, n_tokens = sentence_batches(model, docs, args.sentences)
    print("model: %d tags, %d lexicon forms; decoding %d sentences / %d tokens"
          % (len(model.tagset), len(model.lexicon), len(batches), n_tokens))

    py_time, py_out = run(_viterbi_py, batches, tables)
    print("python kernel: %.3fs  (%.0f tokens/s)" % (py_time, n_tokens / py_time))

    if _viterbi_c is None:
        print("compiled kernel: not built (pip install -e . rebuilds it)")
        return

    c_time, c_out = run(_viterbi_c, batches, tables)
    print("c kernel:      %.3fs  (%.0f tokens/s)" % (c_time, n_tokens / c_time))
    identical = all(list(a) == list(b) for a, b in zip(py_out, c_out))
    print("outputs identical: %s" % identical)
    print("speedup: %.1fx" % (py_time / c_time))
    if not identical:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
