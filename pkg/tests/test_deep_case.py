import pytest

import data.text_analysis as ta
from data.text_analysis import RawSentence, PosTag, EntityTag
from core.errors import UnknownInterrogative
from model.deep_case import (DeepCase, WordType, head_of, cases_for_interrogative, word_type_for_case,
                             load_interrogatives)
from model.extraction import extract_units, content_words

from helpers import GANDHI, VILLAGE, tagged


def cases_of(resources, text):
    tokens = ta.analyse_sentence(RawSentence(text), resources)
    return [[(a.token.surface, a.case) for a in assignments]
            for _, assignments in extract_units(tokens, resources.stopwords)]


def test_gandhi_cases(resources):
    assert cases_of(resources, GANDHI) == [
        [('Gandhiji', DeepCase.AGENT), ('born', DeepCase.ACTION), ('Porbandar', DeepCase.LOCATION)],
        [('Gandhiji', DeepCase.AGENT), ('born', DeepCase.ACTION), ('2-Oct-1869', DeepCase.TIME)],
    ]


def test_copula_cases(resources):
    assert cases_of(resources, 'Rahim is the brother of Karim.') == [
        [('Rahim', DeepCase.AGENT), ('is', DeepCase.ACTION),
         ('brother', DeepCase.PATIENT), ('Karim', DeepCase.PATIENT)],
    ]


def test_copula_adjective_is_a_state(resources):
    assert cases_of(resources, 'Gandhiji was brave.') == [
        [('Gandhiji', DeepCase.AGENT), ('was', DeepCase.ACTION), ('brave', DeepCase.STATE)],
    ]


def test_date_object_is_a_time(resources):
    assert cases_of(resources, 'The ceremony was 2nd May 1900.') == [
        [('ceremony', DeepCase.AGENT), ('was', DeepCase.ACTION), ('2-May-1900', DeepCase.TIME)],
    ]


def test_one_case_per_content_word(resources):
    for sentence, tokens in [(s, ta.analyse_sentence(s, resources)) for s in ta.split_sentences(VILLAGE)]:
        for draft, assignments in extract_units(tokens, resources.stopwords, sentence):
            assert [a.token for a in assignments] == content_words(draft, resources.stopwords)


def test_head_of():
    phrase = tagged(('the', PosTag.DETERMINER), ('old', PosTag.ADJECTIVE), ('house', PosTag.NOUN),
                    ('today', PosTag.ADVERB))
    assert head_of(phrase).surface == 'house'
    assert head_of(tagged(('brave', PosTag.ADJECTIVE))).surface == 'brave'
    assert head_of(()) is None


@pytest.mark.parametrize('word, expected', [
    ('Where', [DeepCase.LOCATION]),
    ('when', [DeepCase.TIME]),
    ('who', [DeepCase.AGENT, DeepCase.PATIENT]),
    ('what', [DeepCase.PATIENT, DeepCase.ACTION, DeepCase.STATE]),
    ('how', [DeepCase.INSTRUMENT, DeepCase.STATE]),
])
def test_cases_for_interrogative(word, expected):
    assert cases_for_interrogative(word) == expected


def test_unknown_interrogative():
    with pytest.raises(UnknownInterrogative) as e:
        cases_for_interrogative('why')
    assert e.value.stage == 'analyze_question'


@pytest.mark.parametrize('case, entity, expected', [
    (DeepCase.AGENT, EntityTag.PERSON, WordType.WHO),
    (DeepCase.PATIENT, EntityTag.NONE, WordType.WHAT),
    (DeepCase.ACTION, EntityTag.NONE, WordType.WHAT),
    (DeepCase.LOCATION, EntityTag.LOCATION, WordType.WHERE),
    (DeepCase.TIME, EntityTag.DATE, WordType.WHEN),
    (DeepCase.INSTRUMENT, EntityTag.NONE, WordType.HOW_WITH),
])
def test_word_type_for_case(case, entity, expected):
    assert word_type_for_case(case, entity) == expected


def test_parse_case_aliases():
    assert DeepCase.parse('Place') == DeepCase.LOCATION
    assert DeepCase.parse('date') == DeepCase.TIME
    assert DeepCase.parse(' agent ') == DeepCase.AGENT
    with pytest.raises(ValueError):
        DeepCase.parse('Reason')


def test_load_interrogatives(tmp_path):
    path = tmp_path / 'interrogatives.tsv'
    path.write_text('# override\nwhy\tAction,State\nwhere\tPlace\nbroken\n', encoding='utf-8')
    table = load_interrogatives(str(path))
    assert table == {'why': (DeepCase.ACTION, DeepCase.STATE), 'where': (DeepCase.LOCATION,)}
    assert cases_for_interrogative('Why', table) == [DeepCase.ACTION, DeepCase.STATE]
