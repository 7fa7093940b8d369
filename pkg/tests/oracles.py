"""Independent scoring oracles for the decoder tests.

Both oracles enumerate the full tag-sequence space and score it with the
model's own probability components (lexicon/guesser emissions, context-tree
transitions), never touching the Viterbi code paths. The numpy oracle keeps
the same left-to-right floating-point association the decoder uses, so on
tie-free models the argmax sequences agree exactly.
"""

import itertools
import math

import numpy as np

NEG_INF = float("-inf")


def transition_cube(model):
    """log P(tag | prev, prev2) for every context pair, boundary included."""
    n = len(model.tagset)
    boundary = n
    cube = np.empty((n + 1, n + 1, n), dtype=np.float64)
    for t2 in range(n + 1):
        for t1 in range(n + 1):
            leaf = model.context.lookup(t1, t2)
            for t, p in enumerate(leaf.probs):
                cube[t2, t1, t] = math.log(p)
    return cube, boundary


def emission_matrix(model, forms):
    """log emission scores per (position, tag); -inf outside the candidates."""
    n = len(model.tagset)
    emit = np.full((len(forms), n), NEG_INF)
    for i, form in enumerate(forms):
        for tag, p in model.emission_candidates(form):
            emit[i, model.tag_index[tag]] = math.log(p)
    return emit


def enumerate_best(model, forms):
    """Exhaustive argmax over all |tagset|^n sequences via dense enumeration.

    Returns (tags, score). np.argmax picks the first maximum in C order,
    i.e. the lexicographically earliest sequence by tagset index.
    """
    cube, boundary = transition_cube(model)
    emit = emission_matrix(model, forms)
    n_tags = len(model.tagset)
    scores = cube[boundary, boundary, :] + emit[0]
    for i in range(1, len(forms)):
        if i == 1:
            term = cube[boundary, :n_tags, :]  # (t0, t1)
        else:
            term = cube.reshape((1,) * (i - 2) + (n_tags + 1, n_tags + 1, n_tags))[
                ..., :n_tags, :n_tags, :
            ]
        scores = (scores[..., None] + term) + emit[i]
    flat_index = int(np.argmax(scores))
    best = np.unravel_index(flat_index, scores.shape)
    return [model.tagset[t] for t in best], float(scores.reshape(-1)[flat_index])


def product_best(model, forms):
    """Second, slower oracle: explicit itertools.product enumeration."""
    cube, boundary = transition_cube(model)
    emit = emission_matrix(model, forms)
    n_tags = len(model.tagset)
    best_score = NEG_INF
    best_seq = None
    for seq in itertools.product(range(n_tags), repeat=len(forms)):
        score = 0.0
        prev1 = prev2 = boundary
        for i, t in enumerate(seq):
            score = (score + cube[prev2, prev1, t]) + emit[i, t]
            prev2 = prev1
            prev1 = t
        if score > best_score:
            best_score = score
            best_seq = seq
    return [model.tagset[t] for t in best_seq], best_score
