from dataclasses import dataclass
from enum import Enum

from core.errors import UnknownInterrogative
from data.text_analysis import Token, PosTag, EntityTag


class DeepCase(Enum):
    AGENT = "Agent"          # one who performs the action
    ACTION = "Action"        # the action (event) being performed
    LOCATION = "Location"    # where the action occurred
    TIME = "Time"            # time of the event
    INSTRUMENT = "Instrument"  # object with which the action is performed
    PATIENT = "Patient"      # what the action is performed on
    STATE = "State"          # current condition of agent or patient

    @classmethod
    def parse(cls, name):
        """
        Case from its name, accepting the display aliases Place and Date
        """
        name = CASE_ALIASES.get(name.strip().lower(), name.strip())
        for case in cls:
            if case.value.lower() == name.lower():
                return case
        raise ValueError("unknown deep case: {}".format(name))


CASE_ALIASES = {'place': 'Location', 'date': 'Time'}


class WordType(Enum):
    WHO = "Who"
    WHAT = "What"
    WHERE = "Where"
    WHEN = "When"
    HOW_WITH = "HowWith"


@dataclass(frozen=True)
class CaseAssignment:
    token: Token
    case: DeepCase


# ordered by preference for answer selection
DEFAULT_INTERROGATIVES = {
    'who': (DeepCase.AGENT, DeepCase.PATIENT),
    'whom': (DeepCase.AGENT, DeepCase.PATIENT),
    'what': (DeepCase.PATIENT, DeepCase.ACTION, DeepCase.STATE),
    'where': (DeepCase.LOCATION,),
    'when': (DeepCase.TIME,),
    'how': (DeepCase.INSTRUMENT, DeepCase.STATE),
}

_ADJUNCT_CASES = {
    'Location': DeepCase.LOCATION,
    'Time': DeepCase.TIME,
    'Instrument': DeepCase.INSTRUMENT,
}

_FUNCTION_POS = (PosTag.AUXILIARY, PosTag.PREPOSITION, PosTag.DETERMINER)


def head_of(span):
    """
    Head token of a phrase: its last noun-like token, else its last token
    """
    for t in reversed(span):
        if t.pos in (PosTag.NOUN, PosTag.PRONOUN, PosTag.NUMBER):
            return t
    return span[-1] if span else None


def assign_deep_cases(unit, parse, stopwords=frozenset()):
    """
    Assigns one deep case to every content word of a knowledge unit.

    Args:
        unit (KnowledgeUnitDraft): unit derived from parse
        parse (ClauseParse): clause the unit was split from
        stopwords (frozenset): lower-cased stopwords excluded from the content words

    Returns:
        list: CaseAssignment for each content word, in sentence order
    """
    cases = {}
    subject_head = head_of(parse.subject)
    if subject_head is not None:
        cases[subject_head.position] = DeepCase.AGENT
    cases[parse.main_verb.position] = DeepCase.ACTION
    if parse.object:
        object_head = head_of(parse.object)
        if object_head.entity == EntityTag.DATE:
            cases[object_head.position] = DeepCase.TIME
        elif parse.copular and object_head.pos == PosTag.ADJECTIVE:
            cases[object_head.position] = DeepCase.STATE
        else:
            cases[object_head.position] = DeepCase.PATIENT
    if unit.adjunct is not None and unit.adjunct.kind.value in _ADJUNCT_CASES:
        cases[head_of(unit.adjunct.phrase).position] = _ADJUNCT_CASES[unit.adjunct.kind.value]

    return [CaseAssignment(t, cases.get(t.position, DeepCase.PATIENT))
            for t in unit.member_tokens
            if t.pos not in _FUNCTION_POS and t.surface.lower() not in stopwords]


def word_type_for_case(case, entity):
    if case in (DeepCase.AGENT, DeepCase.PATIENT):
        return WordType.WHO if entity == EntityTag.PERSON else WordType.WHAT
    if case == DeepCase.LOCATION:
        return WordType.WHERE
    if case == DeepCase.TIME:
        return WordType.WHEN
    if case == DeepCase.INSTRUMENT:
        return WordType.HOW_WITH
    return WordType.WHAT


def cases_for_interrogative(word, table=None):
    """
    Deep cases that can answer a wh-word, most preferred first
    """
    table = DEFAULT_INTERROGATIVES if table is None else table
    try:
        return list(table[word.lower()])
    except KeyError:
        raise UnknownInterrogative("unsupported interrogative: {}".format(word)) from None


def load_interrogatives(path):
    """
    Reads an override table, one `word<TAB>Case,Case,...` line per interrogative
    """
    from data.load_data import load_table
    return load_table(path, lambda value: tuple(DeepCase.parse(v) for v in value.split(',') if v.strip()))
