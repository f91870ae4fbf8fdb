"""Mention counting over profile corpora and symmetrization into networks.

A corpus is a set of per-entity profile texts.  For every profile i and
entity j, the directed count n_ij is the number of whole-word occurrences
of any of j's match strings in i's text; the symmetric edge weight is then
d_ij = n_ij + n_ji.  Matching is case-insensitive, non-overlapping, and
longest-alias-first, so alias lists can safely contain each other's
prefixes.  A hyphen joining two alphanumerics is part of the word: the
alias "Harrow" does not match inside "Mist-Harrow", while a possessive
apostrophe ends the word, so "Sera" matches in "Sera's".
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping

from .errors import AliasCollision, InvalidLabel, MissingProfile, UnknownLabel
from .graph import WeightedNetwork, canonical_label, canonical_pair, from_edge_list

# label -> profile text
ProfileCorpus = Mapping[str, str]
# label -> match strings counted as mentions of that label
AliasTable = Mapping[str, list[str]]
# (mentioner, mentioned) -> count; only positive counts are stored
MentionCounts = Mapping[tuple[str, str], int]


def load_corpus(directory: str | Path) -> dict[str, str]:
    """Read every ``<label>.txt`` file in a directory into a corpus map."""
    corpus: dict[str, str] = {}
    for path in sorted(Path(directory).glob("*.txt")):
        corpus[canonical_label(path.stem)] = path.read_text(encoding="utf-8")
    return corpus


def _is_word_char(text: str, pos: int) -> bool:
    # a hyphen counts as a word character only when it joins alphanumerics
    ch = text[pos]
    if ch.isalnum():
        return True
    if ch == "-":
        before = pos > 0 and text[pos - 1].isalnum()
        after = pos + 1 < len(text) and text[pos + 1].isalnum()
        return before and after
    return False


def _whole_word(text: str, start: int, end: int) -> bool:
    if start > 0 and _is_word_char(text, start - 1):
        return False
    if end < len(text) and _is_word_char(text, end):
        return False
    return True


def _compile_aliases(aliases: AliasTable) -> list[tuple[str, str]]:
    """Lowercased (match string, owner) pairs, longest first.

    Internal whitespace runs collapse to single spaces.  Raises
    AliasCollision when one string (case-insensitively) is claimed by two
    different labels.
    """
    owner_by_string: dict[str, str] = {}
    for label, strings in aliases.items():
        if not strings:
            raise InvalidLabel(f"label {label!r} has an empty alias list")
        for s in strings:
            lowered = " ".join(s.lower().split())
            if not lowered:
                raise InvalidLabel(f"label {label!r} has an empty match string")
            prior = owner_by_string.get(lowered)
            if prior is not None and prior != label:
                raise AliasCollision(
                    f"match string {s!r} is claimed by both {prior!r} and {label!r}"
                )
            owner_by_string[lowered] = label
    return sorted(owner_by_string.items(), key=lambda kv: (-len(kv[0]), kv[0]))


def _match_alias(text: str, pos: int, alias: str) -> int | None:
    """End index of an alias match at ``pos``, else None.

    A single space inside the alias matches any whitespace run, so phrases
    still match when the corpus wraps them across lines.
    """
    i = pos
    for ch in alias:
        if ch == " ":
            if i >= len(text) or not text[i].isspace():
                return None
            while i < len(text) and text[i].isspace():
                i += 1
        else:
            if i >= len(text) or text[i] != ch:
                return None
            i += 1
    return i


def default_aliases(labels: Iterable[str]) -> dict[str, list[str]]:
    """The default table: each label matches only itself."""
    return {label: [label] for label in labels}


def count_mentions(
    corpus: ProfileCorpus,
    aliases: AliasTable | None = None,
    external: Iterable[str] = (),
) -> dict[tuple[str, str], int]:
    """Directed mention counts n_ij over a corpus.

    Labels default to matching their own name; ``aliases`` overrides or
    extends per label.  Every alias-table label must have a profile unless
    listed in ``external`` (entities that are mentioned but have no profile
    of their own).  Matches of a profile's own aliases still consume text
    but are never counted, so self-mentions contribute nothing.
    """
    external = set(external)
    table = default_aliases(corpus)
    for label, strings in (aliases or {}).items():
        if label not in corpus and label not in external:
            raise MissingProfile(
                f"alias label {label!r} has no profile and is not declared external"
            )
        table[label] = list(strings)
    compiled = _compile_aliases(table)

    counts: dict[tuple[str, str], int] = {}
    for mentioner in sorted(corpus):
        text = corpus[mentioner].lower()
        pos = 0
        while pos < len(text):
            advance = 1
            for alias, owner in compiled:
                end = _match_alias(text, pos, alias)
                if end is not None and _whole_word(text, pos, end):
                    if owner != mentioner:
                        key = (mentioner, owner)
                        counts[key] = counts.get(key, 0) + 1
                    advance = end - pos
                    break
            pos += advance
    return counts


def symmetrize(
    m: MentionCounts, node_universe: Iterable[str]
) -> WeightedNetwork:
    """Fold directed counts into a symmetric network: d_ij = n_ij + n_ji.

    Pairs summing to zero produce no edge; universe nodes without any edge
    stay in the network as isolated nodes.
    """
    universe = [canonical_label(x) for x in node_universe]
    known = set(universe)
    sums: dict[tuple[str, str], float] = {}
    for (i, j), count in m.items():
        if i not in known:
            raise UnknownLabel(f"mentioner {i!r} is not in the node universe")
        if j not in known:
            raise UnknownLabel(f"mentioned {j!r} is not in the node universe")
        if count == 0:
            continue
        pair = canonical_pair(i, j)
        sums[pair] = sums.get(pair, 0.0) + count
    records = [(a, b, w) for (a, b), w in sorted(sums.items())]
    return from_edge_list(records, extra_nodes=universe)
