import re
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

import utils
from core.errors import UnparseableDate


class PosTag(Enum):
    NOUN = "Noun"
    VERB = "Verb"
    ADJECTIVE = "Adjective"
    ADVERB = "Adverb"
    PREPOSITION = "Preposition"
    DETERMINER = "Determiner"
    PRONOUN = "Pronoun"
    AUXILIARY = "Auxiliary"
    INTERROGATIVE = "Interrogative"
    NUMBER = "Number"
    OTHER = "Other"


class EntityTag(Enum):
    PERSON = "Person"
    LOCATION = "Location"
    DATE = "Date"
    ORGANIZATION = "Organization"
    NONE = "None"


@dataclass(frozen=True)
class RawSentence:
    text: str
    document_offset: int = 0


@dataclass(frozen=True)
class Token:
    surface: str
    position: int
    pos: Optional[PosTag] = None
    entity: Optional[EntityTag] = None


ABBREVIATIONS = frozenset([
    'mr.', 'mrs.', 'ms.', 'dr.', 'st.', 'prof.', 'sr.', 'jr.', 'mt.', 'lt.',
    'col.', 'gen.', 'capt.', 'rev.', 'hon.', 'vs.', 'etc.', 'e.g.', 'i.e.',
    'no.', 'co.', 'inc.', 'ltd.',
])

MONTHS = {
    'january': 'Jan', 'jan': 'Jan',
    'february': 'Feb', 'feb': 'Feb',
    'march': 'Mar', 'mar': 'Mar',
    'april': 'Apr', 'apr': 'Apr',
    'may': 'May',
    'june': 'Jun', 'jun': 'Jun',
    'july': 'Jul', 'jul': 'Jul',
    'august': 'Aug', 'aug': 'Aug',
    'september': 'Sep', 'sep': 'Sep', 'sept': 'Sep',
    'october': 'Oct', 'oct': 'Oct',
    'november': 'Nov', 'nov': 'Nov',
    'december': 'Dec', 'dec': 'Dec',
}

_SENTENCE_END = re.compile(r'[.!?]+(?=\s|$)')
_LAST_WORD = re.compile(r'(\S+)$')
_TOKEN = re.compile(r"[^\W_]+(?:[-'’][^\W_]+)*")
_ORDINAL = re.compile(r'\d{1,2}(?:st|nd|rd|th)?', re.IGNORECASE)
_YEAR = re.compile(r'\d{4}')
_CANONICAL_DATE = re.compile(r'(\d{1,2})-([^\W\d_]+)-(\d{4})')
_CANONICAL_MONTH_YEAR = re.compile(r'([^\W\d_]+)-(\d{4})')
_NUMBER = re.compile(r'\d+(?:st|nd|rd|th)?|\d+(?:[.,]\d+)*', re.IGNORECASE)

# suffixes tried on a verb stem from the lexicon; "-ing" may drop a final e
_VERB_SUFFIXES = (('ing', ('', 'e')), ('ies', ('y',)), ('ied', ('y',)), ('es', ('', 'e')),
                  ('ed', ('', 'e')), ('s', ('',)), ('d', ('',)))
_LOCATION_MARKERS = frozenset(['in', 'at'])


# Sentence splitting
def _protects_period(text, period_index):
    """
    True if the period at period_index closes a known abbreviation or an ordinal
    """
    match = _LAST_WORD.search(text[:period_index])
    if match is None:
        return False
    word = match.group(1).lower()
    if word + '.' in ABBREVIATIONS:
        return True
    return bool(_ORDINAL.fullmatch(word)) and not word.isdigit()


def _append_sentence(sentences, text, start, end):
    chunk = text[start:end]
    stripped = chunk.strip()
    if stripped:
        leading = len(chunk) - len(chunk.lstrip())
        sentences.append(RawSentence(stripped, start + leading))


def split_sentences(document_text):
    """
    Splits a document at sentence-final punctuation (. ! ?) followed by whitespace or
    the end of the text, except after known abbreviations and ordinals.
    """
    sentences = []
    start = 0
    for match in _SENTENCE_END.finditer(document_text):
        if match.group()[0] == '.' and len(match.group()) == 1 \
                and _protects_period(document_text, match.start()):
            continue
        _append_sentence(sentences, document_text, start, match.end())
        start = match.end()
    _append_sentence(sentences, document_text, start, len(document_text))
    return sentences


def tokenize(sentence):
    """
    Whitespace- and punctuation-delimited tokens; hyphens and apostrophes inside a
    word are kept ("2-Oct-1869", "Gandhiji's").
    """
    text = sentence.text if isinstance(sentence, RawSentence) else sentence
    return [Token(m.group(), i) for i, m in enumerate(_TOKEN.finditer(text))]


# POS tagging
def _verb_from_stem(lower, lexicon):
    for suffix, endings in _VERB_SUFFIXES:
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            stem = lower[:-len(suffix)]
            for ending in endings:
                if lexicon.get(stem + ending) == PosTag.VERB:
                    return True
    return False


def tag_word(surface, lexicon):
    lower = surface.lower()
    if lower in lexicon:
        return lexicon[lower]
    if _NUMBER.fullmatch(lower):
        return PosTag.NUMBER
    if _verb_from_stem(lower, lexicon):
        return PosTag.VERB
    if lower.endswith('ly') and len(lower) > 3:
        return PosTag.ADVERB
    # capitalized words and unknown open-class words alike
    return PosTag.NOUN


def tag_pos(tokens, lexicon):
    """
    Lexicon lookup first, then number and suffix rules (-s/-es/-ed/-ing on a known
    verb stem gives Verb, -ly gives Adverb); anything else is a Noun.
    """
    return [replace(t, pos=tag_word(t.surface, lexicon)) for t in tokens]


# Dates
def normalize_date(span):
    """
    Canonical D-Mon-YYYY form of a date expression (Mon-YYYY when there is no day).
    Input : list of surfaces (or tokens) that matched a date pattern
    Output: canonical string
    """
    words = [w.surface if isinstance(w, Token) else w for w in span]
    words = [w.strip(',') for w in words if w.strip(',') and w.lower() != 'of']
    if len(words) == 1:
        m = _CANONICAL_DATE.fullmatch(words[0])
        if m:
            words = [m.group(1), m.group(2), m.group(3)]
        else:
            m = _CANONICAL_MONTH_YEAR.fullmatch(words[0])
            if m:
                words = [m.group(1), m.group(2)]

    day = month = year = None
    for word in words:
        lower = word.lower()
        if _YEAR.fullmatch(lower) and year is None:
            year = lower
        elif _ORDINAL.fullmatch(lower) and day is None:
            day = int(re.match(r'\d+', lower).group())
        elif month is None and not any(c.isdigit() for c in lower):
            if lower not in MONTHS:
                raise UnparseableDate("unknown month: {}".format(word))
            month = MONTHS[lower]
        else:
            raise UnparseableDate("not a date expression: {}".format(' '.join(words)))
    if month is None or year is None:
        raise UnparseableDate("not a date expression: {}".format(' '.join(words)))
    if day is None:
        return '{}-{}'.format(month, year)
    return '{}-{}-{}'.format(day, month, year)


def _is_day(surface):
    return bool(_ORDINAL.fullmatch(surface)) and 1 <= int(re.match(r'\d+', surface).group()) <= 31


def _is_month(surface):
    return surface.lower() in MONTHS


def _is_year(surface):
    return bool(_YEAR.fullmatch(surface))


def match_date(surfaces, start):
    """
    Length of the date expression starting at index start, 0 if none.
    Patterns: day [of] month year, month day year, month year, canonical single token.
    """
    def at(i):
        return surfaces[i] if i < len(surfaces) else ''

    first = at(start)
    if _CANONICAL_DATE.fullmatch(first) and _is_month(_CANONICAL_DATE.fullmatch(first).group(2)):
        return 1
    if _CANONICAL_MONTH_YEAR.fullmatch(first) and _is_month(_CANONICAL_MONTH_YEAR.fullmatch(first).group(1)):
        return 1
    if _is_day(first):
        offset = 2 if at(start + 1).lower() == 'of' else 1
        if _is_month(at(start + offset)) and _is_year(at(start + offset + 1)):
            return offset + 2
        return 0
    if _is_month(first):
        if _is_day(at(start + 1)) and _is_year(at(start + 2)):
            return 3
        if _is_year(at(start + 1)):
            return 2
    return 0


def merge_dates(tokens):
    """
    Merges every date expression into one Noun token tagged Date with a canonical
    surface, then renumbers positions.
    """
    surfaces = [t.surface for t in tokens]
    merged = []
    i = 0
    while i < len(tokens):
        length = match_date(surfaces, i)
        if length:
            try:
                surface = normalize_date(surfaces[i:i + length])
            except UnparseableDate:
                length = 0
        if length:
            merged.append(replace(tokens[i], surface=surface, pos=PosTag.NOUN, entity=EntityTag.DATE))
            i += length
        else:
            merged.append(tokens[i])
            i += 1
    return [replace(t, position=p) for p, t in enumerate(merged)]


# Entity recognition
def _subject_end(tokens):
    for t in tokens:
        if t.pos in (PosTag.AUXILIARY, PosTag.VERB):
            return t.position
    return len(tokens)


def recognize_entities(tokens, gazetteer):
    """
    Gazetteer first, then date patterns (merged into a single token), then a
    capitalized noun after in/at is a Location and a capitalized noun before the
    first verb is a Person. Everything else gets EntityTag.NONE.
    """
    tokens = merge_dates(tokens)
    subject_end = _subject_end(tokens)
    out = []
    for i, t in enumerate(tokens):
        if t.entity == EntityTag.DATE:
            out.append(t)
            continue
        entity = gazetteer.get(t.surface, gazetteer.get(t.surface.lower()))
        if entity is None:
            entity = EntityTag.NONE
            if t.pos == PosTag.NOUN and utils.is_capitalized(t.surface):
                if i > 0 and tokens[i - 1].surface.lower() in _LOCATION_MARKERS:
                    entity = EntityTag.LOCATION
                elif i < subject_end:
                    entity = EntityTag.PERSON
        out.append(replace(t, entity=entity))
    return out


def analyse_sentence(sentence, resources):
    tokens = tokenize(sentence)
    tokens = tag_pos(tokens, resources.lexicon)
    return recognize_entities(tokens, resources.gazetteer)
