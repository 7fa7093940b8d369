"""Pure-Python trigram Viterbi kernel.

Reference implementation of the decoding recurrence; the compiled kernel in
_viterbi_c.pyx performs the identical arithmetic in the identical order, so
the two always return the same path. States at position i are pairs of
candidate indices (token i-1, token i); the score of extending a state is
(previous + transition) + emission, with strict ``>`` improvement and
ascending candidate order, so ties resolve toward earlier tagset entries.
"""


def viterbi_path(offs_arr, tags_arr, emits_arr, leaf_index_arr, leaf_logdist_arr, boundary):
    offs = offs_arr.tolist()
    tags = tags_arr.tolist()
    emits = emits_arr.tolist()
    L = leaf_index_arr.tolist()
    D = leaf_logdist_arr.tolist()
    n = len(offs) - 1
    neg_inf = float("-inf")

    base0 = offs[0]
    w0 = offs[1] - base0
    row0 = D[L[boundary][boundary]]
    prev = [[row0[tags[base0 + k]] + emits[base0 + k] for k in range(w0)]]
    backpointers = []

    for i in range(1, n):
        base = offs[i]
        width = offs[i + 1] - base
        pbase = offs[i - 1]
        pwidth = base - pbase
        ppbase = offs[i - 2] if i >= 2 else 0
        ppwidth = (pbase - ppbase) if i >= 2 else 1
        cur = [[neg_inf] * width for _ in range(pwidth)]
        bp = [[0] * width for _ in range(pwidth)]
        for j in range(pwidth):
            tj = tags[pbase + j]
            for k in range(width):
                tk = tags[base + k]
                emit = emits[base + k]
                best = neg_inf
                arg = 0
                for m in range(ppwidth):
                    tm = boundary if i == 1 else tags[ppbase + m]
                    score = (prev[m][j] + D[L[tm][tj]][tk]) + emit
                    if score > best:
                        best = score
                        arg = m
                cur[j][k] = best
                bp[j][k] = arg
        backpointers.append(bp)
        prev = cur

    best = neg_inf
    best_j = best_k = 0
    for j, row in enumerate(prev):
        for k, score in enumerate(row):
            if score > best:
                best = score
                best_j = j
                best_k = k

    path = [0] * n
    path[n - 1] = tags[offs[n - 1] + best_k]
    if n >= 2:
        path[n - 2] = tags[offs[n - 2] + best_j]
    j, k = best_j, best_k
    for i in range(n - 1, 1, -1):
        m = backpointers[i - 1][j][k]
        path[i - 2] = tags[offs[i - 2] + m]
        j, k = m, j
    return path
