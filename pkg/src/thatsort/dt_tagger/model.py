"""Trainable probabilistic tagger: lexicon, suffix guesser, context decision tree.

The model family follows the classic decision-tree tagger design: per-form
emission probabilities from relative frequencies, a suffix trie with backoff
interpolation for unknown forms, and a binary decision tree over the two
predecessor tags that supplies transition distributions for trigram decoding.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyCorpus, UntaggedToken

BOUNDARY = "<s>"


@dataclass(frozen=True, slots=True)
class TrainParams:
    min_leaf: int = 10
    gain_threshold: float = 0.01
    suffix_len: int = 5
    smoothing: float = 0.1
    case_normalize: bool = True


class Lexicon:
    """form -> tag counts, with an optional lowercase lookup fallback."""

    __slots__ = ("counts", "case_normalize")

    def __init__(self, case_normalize=True):
        self.counts = {}
        self.case_normalize = case_normalize

    def add(self, form, tag, n=1):
        by_tag = self.counts.setdefault(form, {})
        by_tag[tag] = by_tag.get(tag, 0) + n

    def tag_counts(self, form):
        """Counts for a form, falling back to its lowercased variant."""
        hit = self.counts.get(form)
        if hit is None and self.case_normalize:
            hit = self.counts.get(form.lower())
        return hit

    def entries(self, form, tag_order):
        """Relative-frequency (tag, probability) pairs in tagset order."""
        by_tag = self.tag_counts(form)
        if not by_tag:
            return None
        total = sum(by_tag.values())
        return [(tag, by_tag[tag] / total) for tag in sorted(by_tag, key=tag_order)]

    def __contains__(self, form):
        return self.tag_counts(form) is not None

    def __len__(self):
        return len(self.counts)


class SuffixGuesser:
    """Suffix trie over open-class tokens; distributions interpolate toward
    shorter suffixes and bottom out at the open-class tag prior."""

    __slots__ = ("max_len", "theta", "open_tags", "prior_counts", "root")

    def __init__(self, max_len=5, theta=0.1):
        self.max_len = max_len
        self.theta = theta
        self.open_tags = []
        self.prior_counts = {}
        self.root = _trie_node()

    def add(self, form, tag):
        self.prior_counts[tag] = self.prior_counts.get(tag, 0) + 1
        node = self.root
        chars = form.lower()
        for depth in range(1, min(self.max_len, len(chars)) + 1):
            node = node["children"].setdefault(chars[-depth], _trie_node())
            counts = node["counts"]
            counts[tag] = counts.get(tag, 0) + 1

    def distribution(self, form):
        """Smoothed (tag, probability) pairs over the open-class tags."""
        prior_total = sum(self.prior_counts[t] for t in self.open_tags)
        probs = [self.prior_counts.get(t, 0) / prior_total for t in self.open_tags]
        node = self.root
        chars = form.lower()
        for depth in range(1, min(self.max_len, len(chars)) + 1):
            node = node["children"].get(chars[-depth])
            if node is None:
                break
            counts = node["counts"]
            total = sum(counts.values())
            probs = [
                (counts.get(t, 0) + self.theta * p) / (total + self.theta)
                for t, p in zip(self.open_tags, probs)
            ]
        return list(zip(self.open_tags, probs))

    def iter_suffixes(self):
        """Yield (suffix, counts) for every trie node, suffix text as written."""

        def walk(node, rev_chars):
            for ch in node["children"]:
                child = node["children"][ch]
                suffix = "".join(reversed(rev_chars + [ch]))
                yield suffix, child["counts"]
                yield from walk(child, rev_chars + [ch])

        yield from walk(self.root, [])

    def insert_suffix(self, suffix, counts):
        """Place a (suffix -> counts) entry directly; used when loading."""
        node = self.root
        for ch in reversed(suffix):
            node = node["children"].setdefault(ch, _trie_node())
        node["counts"].update(counts)


def _trie_node():
    return {"counts": {}, "children": {}}


class TreeLeaf:
    """Tag distribution at a context-tree leaf (raw counts + smoothed probs)."""

    __slots__ = ("counts", "total", "probs")

    def __init__(self, counts, theta):
        self.counts = tuple(int(c) for c in counts)
        self.total = sum(self.counts)
        denom = self.total + theta * len(self.counts)
        self.probs = tuple((c + theta) / denom for c in self.counts)


class TreeSplit:
    """Binary test "tag at -offset == test_tag" with yes/no subtrees."""

    __slots__ = ("offset", "test_tag", "yes", "no")

    def __init__(self, offset, test_tag, yes, no):
        self.offset = offset
        self.test_tag = test_tag
        self.yes = yes
        self.no = no


class ContextTree:
    __slots__ = ("root",)

    def __init__(self, root):
        self.root = root

    def lookup(self, t1_idx, t2_idx):
        """Leaf for the context (previous tag, tag before that), as indices."""
        node = self.root
        while isinstance(node, TreeSplit):
            ctx = t1_idx if node.offset == 1 else t2_idx
            node = node.yes if ctx == node.test_tag else node.no
        return node

    def leaves(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, TreeSplit):
                stack.append(node.no)
                stack.append(node.yes)
            else:
                yield node

    def depth(self):
        def walk(node):
            if isinstance(node, TreeLeaf):
                return 0
            return 1 + max(walk(node.yes), walk(node.no))

        return walk(self.root)


class TaggerModel:
    __slots__ = ("tagset", "tag_index", "lexicon", "guesser", "context", "params",
                 "format_version", "_compiled")

    def __init__(self, tagset, lexicon, guesser, context, params):
        self.tagset = tuple(tagset)
        self.tag_index = {t: i for i, t in enumerate(self.tagset)}
        self.lexicon = lexicon
        self.guesser = guesser
        self.context = context
        self.params = params
        self.format_version = 1
        self._compiled = None

    @property
    def boundary_index(self):
        return len(self.tagset)

    def emission_candidates(self, form):
        """Scored tags for a form: lexicon entry, or the suffix guesser."""
        entries = self.lexicon.entries(form, self.tag_index.__getitem__)
        if entries is not None:
            return entries
        return self.guesser.distribution(form)


def _entropy_bits(counts):
    """Entropy of an integer count vector, in bits."""
    total = int(counts.sum())
    if total == 0:
        return 0.0
    nz = counts[counts > 0]
    if nz.shape[0] <= 1:
        return 0.0
    return float(np.log2(total) - float((nz * np.log2(nz)).sum()) / total)


def _grow_tree(t2, t1, y, n_tags, params):
    """Recursive binary splitting on predecessor-tag tests by information gain.

    Context values range over 0..n_tags (the last index is the boundary tag);
    candidate tests iterate offset -1 before -2 and tags in tagset order with
    the boundary last, so tie scores resolve to the earliest test.
    """
    n_ctx = n_tags + 1

    def build(idx):
        ys = y[idx]
        ycounts = np.bincount(ys, minlength=n_tags)
        total = idx.shape[0]
        base = _entropy_bits(ycounts)
        best_gain = 0.0
        best_test = None
        if total >= params.min_leaf and base > 0.0:
            for offset, ctx in ((1, t1), (2, t2)):
                ctxs = ctx[idx].astype(np.int64)
                joint = np.bincount(
                    ctxs * n_tags + ys, minlength=n_ctx * n_tags
                ).reshape(n_ctx, n_tags)
                for v in range(n_ctx):
                    yes = joint[v]
                    n_yes = int(yes.sum())
                    if n_yes == 0 or n_yes == total:
                        continue
                    no = ycounts - yes
                    weighted = (
                        n_yes * _entropy_bits(yes) + (total - n_yes) * _entropy_bits(no)
                    ) / total
                    gain = base - weighted
                    if gain > best_gain:
                        best_gain = gain
                        best_test = (offset, v)
        if best_test is None or best_gain < params.gain_threshold:
            return TreeLeaf(ycounts, params.smoothing)
        offset, v = best_test
        ctx = t1 if offset == 1 else t2
        mask = ctx[idx] == v
        return TreeSplit(offset, v, build(idx[mask]), build(idx[~mask]))

    return ContextTree(build(np.arange(y.shape[0])))


def train(corpus, params=None):
    """Train a tagger from documents whose tokens carry xpos tags.

    Deterministic for a fixed corpus order and parameter set: the tagset is
    sorted, counting is exact, and tree tests are examined in a fixed order.
    """
    if params is None:
        params = TrainParams()
    sentences = []
    for doc in corpus:
        for sent_idx, sent in enumerate(doc.sentences):
            pairs = []
            for tok in sent.tokens:
                if tok.xpos in ("_", ""):
                    raise UntaggedToken(
                        "%s: sentence %d, token %d (%r) has no tag"
                        % (doc.source_name, sent_idx, tok.id, tok.form)
                    )
                pairs.append((tok.form, tok.xpos))
            if pairs:
                sentences.append(pairs)
    if not sentences:
        raise EmptyCorpus("no tagged tokens in training corpus")

    tagset = sorted({tag for sent in sentences for _, tag in sent})
    tag_index = {t: i for i, t in enumerate(tagset)}
    boundary = len(tagset)

    lexicon = Lexicon(case_normalize=params.case_normalize)
    form_freq = {}
    for sent in sentences:
        for form, tag in sent:
            lexicon.add(form, tag)
            form_freq[form] = form_freq.get(form, 0) + 1

    # Unknown words behave like the words seen only once: their tags define
    # the open class the guesser distributes over.
    open_tags = sorted(
        {tag for sent in sentences for form, tag in sent if form_freq[form] == 1},
        key=tag_index.__getitem__,
    )
    if not open_tags:
        open_tags = list(tagset)
    open_set = set(open_tags)
    guesser = SuffixGuesser(max_len=params.suffix_len, theta=params.smoothing)
    guesser.open_tags = open_tags
    for sent in sentences:
        for form, tag in sent:
            if tag in open_set:
                guesser.add(form, tag)

    n_samples = sum(len(s) for s in sentences)
    t2 = np.empty(n_samples, dtype=np.int32)
    t1 = np.empty(n_samples, dtype=np.int32)
    y = np.empty(n_samples, dtype=np.int32)
    pos = 0
    for sent in sentences:
        prev1 = prev2 = boundary
        for _, tag in sent:
            cur = tag_index[tag]
            t2[pos] = prev2
            t1[pos] = prev1
            y[pos] = cur
            pos += 1
            prev2 = prev1
            prev1 = cur
    context = _grow_tree(t2, t1, y, len(tagset), params)

    return TaggerModel(tagset, lexicon, guesser, context, params)
