import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional, Tuple

import utils
import data.text_analysis as ta
from data.text_analysis import PosTag, RawSentence
from core.errors import (NoInterrogative, NoContentWords, UnknownWord, NoCaseMatch,
                         NoPathFound)
from model.deep_case import cases_for_interrogative

logger = logging.getLogger('base')

_SKIPPED_POS = (PosTag.AUXILIARY, PosTag.PREPOSITION, PosTag.DETERMINER, PosTag.INTERROGATIVE)


@dataclass(frozen=True)
class Question:
    raw: str
    interrogative: str
    content_words: Tuple[str, ...]
    required_cases: Tuple = ()


@dataclass(frozen=True)
class Candidate:
    knowledge_id: int
    matched_word_ids: frozenset
    case_match: Optional[Tuple] = None


@dataclass
class Answer:
    texts: Tuple[str, ...]
    knowledge_ids: Tuple[int, ...]
    answer_word: Optional[str]
    hops: int
    trace: dict = field(default_factory=OrderedDict)

    @property
    def text(self):
        return ' ⇐ '.join(self.texts)


class QAEngine:
    """
    Extraction phase over a read-only network snapshot: question analysis, direct
    search with deep-case filtering, and multi-hop chaining when no single knowledge
    unit answers.
    """

    def __init__(self, network, resources, max_hops=utils.DEFAULT_MAX_HOPS):
        self.net = network
        self.resources = resources
        self.max_hops = max_hops

    # question analysis
    def analyze_question(self, text):
        tokens = ta.analyse_sentence(RawSentence(text.strip()), self.resources)
        table = self.resources.interrogatives
        interrogative = next((t for t in tokens if t.surface.lower() in table), None)
        if interrogative is None:
            raise NoInterrogative("no supported wh-word in: {}".format(text.strip()))
        content = tuple(
            t.surface for t in tokens
            if t is not interrogative
            and t.pos not in _SKIPPED_POS
            and t.surface.lower() not in self.resources.stopwords
        )
        if not content:
            raise NoContentWords("no content words in: {}".format(text.strip()))
        return Question(
            raw=text,
            interrogative=interrogative.surface.lower(),
            content_words=content,
            required_cases=tuple(cases_for_interrogative(interrogative.surface, table)),
        )

    # resolution
    def resolve_word(self, surface):
        """
        Word id of a question word: exact case-insensitive match first, then the
        lowest id sharing a suffix-stripped stem (-s, -es, -ed).
        Output: (word_id, how) or (None, None)
        """
        word_id = self.net.lookup(surface)
        if word_id is not None:
            return word_id, 'exact'
        stems = utils.suffix_stems(utils.canonical(surface))
        for candidate_id, node in sorted(self.net.words.items()):
            if stems & utils.suffix_stems(node.surface_canonical):
                return candidate_id, 'suffix'
        return None, None

    def _resolve(self, q, strict=True):
        resolved = OrderedDict()
        rows = []
        for word in q.content_words:
            word_id, how = self.resolve_word(word)
            if word_id is None:
                if strict:
                    raise UnknownWord(word)
                continue
            resolved.setdefault(word_id, word)
            rows.append(OrderedDict([('word', word), ('id', word_id), ('via', how)]))
        return resolved, rows

    def case_match(self, knowledge_id, q, exclude=()):
        """
        First word of the unit whose case answers the question, by required-case
        preference then unit word order. Question words never answer themselves.
        """
        entry = self.net.entry(knowledge_id)
        for case in q.required_cases:
            for word_id in entry.word_ids:
                if word_id not in exclude and entry.cases[word_id] == case:
                    return word_id, case
        return None

    # direct search
    def search_direct(self, q, trace=None):
        resolved, rows = self._resolve(q)
        ids = frozenset(resolved)
        candidates = [Candidate(k, ids, self.case_match(k, q, ids))
                      for k in self.net.knowledge_containing(ids)]
        if trace is not None:
            trace['resolved'] = rows
            trace['candidates'] = [self._candidate_record(c) for c in candidates]
        return candidates

    def _rank(self, candidate, q):
        _, case = candidate.case_match
        return (q.required_cases.index(case), -len(candidate.matched_word_ids), candidate.knowledge_id)

    def select_answer(self, candidates, q, trace=None):
        matched = [c for c in candidates if c.case_match is not None]
        if trace is not None:
            trace['case_filter'] = OrderedDict([
                ('required_cases', [c.value for c in q.required_cases]),
                ('kept', [c.knowledge_id for c in matched]),
                ('dropped', [c.knowledge_id for c in candidates if c.case_match is None]),
            ])
        if not matched:
            if candidates:
                raise NoCaseMatch("no knowledge unit relating {} answers '{}'".format(
                    ', '.join(q.content_words), q.interrogative))
            raise NoCaseMatch("no knowledge unit relates {}".format(', '.join(q.content_words)))
        best = min(matched, key=lambda c: self._rank(c, q))
        entry = self.net.entry(best.knowledge_id)
        return Answer(
            texts=(entry.text,),
            knowledge_ids=(entry.id,),
            answer_word=self.net.word(best.case_match[0]).display_surface,
            hops=1,
            trace=trace if trace is not None else OrderedDict(),
        )

    # multi-hop
    def hop_strength(self, previous_id, next_id):
        """
        Largest weight of a link joining a bridge word (shared by both units) to
        another member of the next unit
        """
        previous_words = set(self.net.entry(previous_id).word_ids)
        next_words = self.net.entry(next_id).word_ids
        strength = 0
        for bridge in next_words:
            if bridge not in previous_words:
                continue
            for other in next_words:
                if other != bridge:
                    link = self.net.adjacency[bridge].get(other)
                    strength = max(strength, link.weight if link is not None else 0)
        return strength

    def _chain_strength(self, chain):
        return min(self.hop_strength(a, b) for a, b in zip(chain, chain[1:]))

    def _chains(self, q, ids, starts, length):
        """
        Simple chains of exactly `length` units from `starts` that end on a goal unit.
        A prefix is only extended while some walk of the remaining length from its
        (last unit, covered question words) state still reaches a goal, so dead
        branches are cut once per state instead of once per chain.
        """
        neighbours = {}
        covers = {}
        reachable = {}

        def neighbours_of(knowledge_id):
            if knowledge_id not in neighbours:
                neighbours[knowledge_id] = self.net.knowledge_neighbours(knowledge_id)
            return neighbours[knowledge_id]

        def covered_by(knowledge_id):
            if knowledge_id not in covers:
                covers[knowledge_id] = ids & frozenset(self.net.entry(knowledge_id).word_ids)
            return covers[knowledge_id]

        def reaches_goal(knowledge_id, covered, steps):
            key = (knowledge_id, covered, steps)
            if key not in reachable:
                if steps == 0:
                    reachable[key] = covered == ids and self.case_match(knowledge_id, q, ids) is not None
                else:
                    reachable[key] = any(
                        reaches_goal(k, covered | covered_by(k), steps - 1) for k in neighbours_of(knowledge_id))
            return reachable[key]

        def extend(chain, covered):
            remaining = length - len(chain)
            if remaining == 0:
                yield chain
                return
            for k in neighbours_of(chain[-1]):
                if k in chain:
                    continue
                extended = covered | covered_by(k)
                if reaches_goal(k, extended, remaining - 1):
                    yield from extend(chain + (k,), extended)

        for start in starts:
            if reaches_goal(start, covered_by(start), length - 1):
                yield from extend((start,), covered_by(start))

    def answer_multi_hop(self, q, max_hops=None, trace=None):
        """
        Breadth-first search over knowledge units (adjacent when they share a word)
        from the units holding the first resolvable question word, up to max_hops
        units. The goal unit must answer the question's case and the chain must cover
        every resolvable question word. Equal-length chains are ranked by their weakest
        hop, then by id sequence.
        """
        max_hops = self.max_hops if max_hops is None else max_hops
        if max_hops < 1:
            raise ValueError("max_hops must be >= 1")
        resolved, rows = self._resolve(q, strict=False)
        if not resolved:
            raise UnknownWord(q.content_words[0])
        ids = frozenset(resolved)
        first = next(iter(resolved))

        starts = self.net.knowledge_of(first)
        best = None
        for length in range(1, max_hops + 1):
            goals = list(self._chains(q, ids, starts, length))
            if goals:
                if length == 1:
                    best = min(goals, key=lambda c: self._rank(
                        Candidate(c[0], ids, self.case_match(c[0], q, ids)), q))
                else:
                    best = min(goals, key=lambda c: (-self._chain_strength(c), c))
                break

        if trace is not None:
            trace.setdefault('resolved', rows)
            trace['multi_hop'] = OrderedDict([
                ('start', self.net.knowledge_of(first)),
                ('max_hops', max_hops),
                ('chain', list(best) if best else None),
            ])
        if best is None:
            raise NoPathFound("no chain of at most {} knowledge units answers '{}'".format(
                max_hops, q.raw.strip()))
        answer_id, _ = self.case_match(best[-1], q, ids)
        return Answer(
            texts=tuple(self.net.entry(k).text for k in best),
            knowledge_ids=tuple(best),
            answer_word=self.net.word(answer_id).display_surface,
            hops=len(best),
            trace=trace if trace is not None else OrderedDict(),
        )

    # orchestration
    def answer(self, text):
        """
        analyze_question -> search_direct -> select_answer, falling back to
        answer_multi_hop when no single unit answers (and max_hops >= 2)
        """
        trace = OrderedDict([('question', text.strip())])
        q = self.analyze_question(text)
        trace['interrogative'] = q.interrogative
        trace['required_cases'] = [c.value for c in q.required_cases]
        trace['content_words'] = list(q.content_words)
        candidates = self.search_direct(q, trace)
        try:
            result = self.select_answer(candidates, q, trace)
            trace['route'] = 'direct'
        except NoCaseMatch:
            if self.max_hops < 2:
                raise
            trace['route'] = 'multi_hop'
            result = self.answer_multi_hop(q, trace=trace)
        trace['answer'] = OrderedDict([
            ('texts', list(result.texts)),
            ('knowledge_ids', list(result.knowledge_ids)),
            ('answer_word', result.answer_word),
            ('hops', result.hops),
        ])
        logger.info('"{}" -> {}'.format(text.strip(), result.text))
        return result

    def _candidate_record(self, candidate):
        record = OrderedDict([
            ('knowledge_id', candidate.knowledge_id),
            ('text', self.net.entry(candidate.knowledge_id).text),
            ('matched_word_ids', sorted(candidate.matched_word_ids)),
            ('case_match', None),
        ])
        if candidate.case_match is not None:
            word_id, case = candidate.case_match
            record['case_match'] = OrderedDict([
                ('word_id', word_id),
                ('word', self.net.word(word_id).display_surface),
                ('case', case.value),
            ])
        return record
