import re
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Tuple

from core.errors import NoVerbFound
from data.text_analysis import Token, RawSentence, PosTag, EntityTag
from model.deep_case import head_of, assign_deep_cases

logger = logging.getLogger('base')

LOCATION_PREPOSITIONS = frozenset(['in', 'at', 'near'])
_YEAR = re.compile(r'\d{4}')
_FUNCTION_POS = (PosTag.AUXILIARY, PosTag.PREPOSITION, PosTag.DETERMINER)


class AdjunctKind(Enum):
    LOCATION = "Location"
    TIME = "Time"
    INSTRUMENT = "Instrument"
    OTHER = "Other"


@dataclass(frozen=True)
class Adjunct:
    preposition: str
    phrase: Tuple[Token, ...]
    kind: AdjunctKind
    marker: Optional[Token] = None


@dataclass(frozen=True)
class ClauseParse:
    subject: Tuple[Token, ...]
    verb_group: Tuple[Token, ...]
    object: Tuple[Token, ...]
    adjuncts: Tuple[Adjunct, ...]
    copular: bool = False

    @property
    def main_verb(self):
        return self.verb_group[-1]

    @property
    def core(self):
        return self.subject + self.verb_group + self.object


@dataclass(frozen=True)
class KnowledgeUnitDraft:
    text: str
    member_tokens: Tuple[Token, ...]
    source_sentence: Optional[RawSentence] = None
    adjunct: Optional[Adjunct] = None


def adjunct_kind(preposition, phrase):
    head = head_of(phrase)
    if head is not None and head.entity == EntityTag.DATE:
        return AdjunctKind.TIME
    # a bare year ("in 1869")
    if head is not None and head.pos == PosTag.NUMBER and _YEAR.fullmatch(head.surface):
        return AdjunctKind.TIME
    if (head is not None and head.entity == EntityTag.LOCATION) or preposition in LOCATION_PREPOSITIONS:
        return AdjunctKind.LOCATION
    if preposition == 'with' and (head is None or head.entity != EntityTag.PERSON):
        return AdjunctKind.INSTRUMENT
    return AdjunctKind.OTHER


def _segment(tokens):
    """
    Splits a token run at prepositions: (leading tokens, [(preposition token, phrase), ...])
    """
    leading = []
    phrases = []
    for t in tokens:
        if t.pos == PosTag.PREPOSITION:
            phrases.append((t, []))
        elif phrases:
            phrases[-1][1].append(t)
        else:
            leading.append(t)
    return leading, phrases


def _adjuncts(phrases):
    adjuncts = []
    for marker, phrase in phrases:
        if not phrase:
            continue
        preposition = marker.surface.lower()
        adjuncts.append(Adjunct(preposition, tuple(phrase), adjunct_kind(preposition, phrase), marker))
    return adjuncts


def parse_clause(tokens):
    """
    Parses a tagged sentence into subject, verb group, object and adjuncts.
    The verb group is the first run Auxiliary* Verb; when auxiliaries are not followed
    by a verb, the last one is a copula and becomes the main verb.
    """
    tokens = list(tokens)
    start = next((i for i, t in enumerate(tokens) if t.pos in (PosTag.AUXILIARY, PosTag.VERB)), None)
    if start is None:
        raise NoVerbFound("no verb in: {}".format(' '.join(t.surface for t in tokens)))

    end = start
    while end < len(tokens) and tokens[end].pos in (PosTag.AUXILIARY, PosTag.ADVERB):
        end += 1
    copular = False
    if end < len(tokens) and tokens[end].pos == PosTag.VERB:
        end += 1
    else:
        # copula: promote the last auxiliary
        while end > start and tokens[end - 1].pos != PosTag.AUXILIARY:
            end -= 1
        tokens[end - 1] = replace(tokens[end - 1], pos=PosTag.VERB)
        copular = True
    verb_group = tuple(tokens[start:end])

    leading, pre_phrases = _segment(tokens[:start])
    if leading or not pre_phrases:
        subject = tuple(leading)
    else:
        # "In 1869 Gandhiji was born": the subject closes the last fronted phrase
        marker, phrase = pre_phrases[-1]
        cut = len(phrase) - 1
        while cut > 0 and phrase[cut - 1].pos in (PosTag.DETERMINER, PosTag.ADJECTIVE):
            cut -= 1
        subject = tuple(phrase[cut:])
        pre_phrases[-1] = (marker, phrase[:cut])
    obj, post_phrases = _segment(tokens[end:])

    return ClauseParse(
        subject=subject,
        verb_group=verb_group,
        object=tuple(obj),
        adjuncts=tuple(_adjuncts(pre_phrases) + _adjuncts(post_phrases)),
        copular=copular,
    )


def _draft(tokens, sentence, adjunct=None):
    tokens = tuple(sorted(tokens, key=lambda t: t.position))
    return KnowledgeUnitDraft(' '.join(t.surface for t in tokens), tokens, sentence, adjunct)


def split_knowledge_units(parse, sentence=None):
    """
    One unit per adjunct (core + that adjunct), or the bare core when there is none
    """
    if not parse.adjuncts:
        return [_draft(parse.core, sentence)]
    drafts = []
    for adjunct in parse.adjuncts:
        marker = (adjunct.marker,) if adjunct.marker is not None else ()
        drafts.append(_draft(parse.core + marker + adjunct.phrase, sentence, adjunct))
    return drafts


def content_words(unit, stopwords):
    return [t for t in unit.member_tokens
            if t.pos not in _FUNCTION_POS and t.surface.lower() not in stopwords]


def extract_units(tokens, stopwords, sentence=None):
    """
    parse_clause -> split_knowledge_units -> assign_deep_cases for one tagged sentence
    Output: list of (KnowledgeUnitDraft, list of CaseAssignment)
    """
    parse = parse_clause(tokens)
    return [(draft, assign_deep_cases(draft, parse, stopwords))
            for draft in split_knowledge_units(parse, sentence)]
