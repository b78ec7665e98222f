import os

import pytest

import utils
import data.text_analysis as ta
from data.text_analysis import PosTag, EntityTag, RawSentence
from core.errors import UnparseableDate

from helpers import GANDHI, VILLAGE


def texts(sentences):
    return [s.text for s in sentences]


def test_split_two_sentences():
    sentences = ta.split_sentences('A is B. C is D.')
    assert texts(sentences) == ['A is B.', 'C is D.']
    assert [s.document_offset for s in sentences] == [0, 8]


def test_split_keeps_ordinal_date_in_one_sentence():
    assert texts(ta.split_sentences(GANDHI)) == [GANDHI]


def test_split_skips_abbreviations():
    sentences = ta.split_sentences('Mr. Rahim lives in Delhi. Dr. Karim lives in Porbandar!')
    assert texts(sentences) == ['Mr. Rahim lives in Delhi.', 'Dr. Karim lives in Porbandar!']


def test_split_question_and_trailing_text():
    assert texts(ta.split_sentences('Who is he? He is Rahim')) == ['Who is he?', 'He is Rahim']


def test_split_empty_document():
    assert ta.split_sentences('') == []
    assert ta.split_sentences('   \n ') == []


def test_split_preserves_content():
    document = 'Rahim is the brother of Karim.  Karim lives in Porbandar.\nMr. Karim was born on 2nd May 1900.'
    sentences = ta.split_sentences(document)
    assert ''.join(''.join(texts(sentences)).split()) == ''.join(document.split())
    for s in sentences:
        assert document[s.document_offset:s.document_offset + len(s.text)] == s.text


def test_tokenize_drops_punctuation():
    tokens = ta.tokenize(RawSentence("Gandhiji's visit, on 2-Oct-1869, ended."))
    assert [t.surface for t in tokens] == ["Gandhiji's", 'visit', 'on', '2-Oct-1869', 'ended']
    assert [t.position for t in tokens] == list(range(5))


def test_tokenize_plain_string():
    assert [t.surface for t in ta.tokenize('Where was Gandhiji born?')] == ['Where', 'was', 'Gandhiji', 'born']


@pytest.mark.parametrize('surface, expected', [
    ('was', PosTag.AUXILIARY),
    ('born', PosTag.VERB),
    ('lives', PosTag.VERB),
    ('living', PosTag.VERB),
    ('married', PosTag.VERB),
    ('in', PosTag.PREPOSITION),
    ('the', PosTag.DETERMINER),
    ('Where', PosTag.INTERROGATIVE),
    ('1869', PosTag.NUMBER),
    ('2nd', PosTag.NUMBER),
    ('quickly', PosTag.ADVERB),
    ('brave', PosTag.ADJECTIVE),
    ('Porbandar', PosTag.NOUN),
    ('spinach', PosTag.NOUN),
])
def test_tag_word(resources, surface, expected):
    assert ta.tag_word(surface, resources.lexicon) == expected


def test_tag_pos_tags_every_token(resources):
    tokens = ta.tag_pos(ta.tokenize(GANDHI), resources.lexicon)
    assert all(t.pos is not None for t in tokens)


@pytest.mark.parametrize('span', [
    ['2nd', 'October', '1869'],
    ['2', 'Oct', '1869'],
    ['October', '2', '1869'],
    ['2nd', 'of', 'October', '1869'],
    ['2-Oct-1869'],
])
def test_normalize_date(span):
    assert ta.normalize_date(span) == '2-Oct-1869'


def test_normalize_date_month_year():
    assert ta.normalize_date(['October', '1869']) == 'Oct-1869'
    assert ta.normalize_date(['Oct-1869']) == 'Oct-1869'


def test_normalize_date_is_idempotent():
    once = ta.normalize_date(['31st', 'December', '1999'])
    assert once == '31-Dec-1999'
    assert ta.normalize_date([once]) == once


def test_normalize_date_unknown_month():
    with pytest.raises(UnparseableDate):
        ta.normalize_date(['2nd', 'Octember', '1869'])


def test_match_date():
    surfaces = ['born', 'on', '2nd', 'October', '1869', 'in', 'Porbandar']
    assert ta.match_date(surfaces, 2) == 3
    assert ta.match_date(surfaces, 0) == 0
    assert ta.match_date(['in', 'May', '1900'], 1) == 2


def test_recognize_entities_gandhi(resources):
    tokens = ta.analyse_sentence(RawSentence(GANDHI), resources)
    assert [t.surface for t in tokens] == ['Gandhiji', 'was', 'born', 'in', 'Porbandar', 'on', '2-Oct-1869']
    assert [t.entity for t in tokens] == [
        EntityTag.PERSON, EntityTag.NONE, EntityTag.NONE, EntityTag.NONE,
        EntityTag.LOCATION, EntityTag.NONE, EntityTag.DATE,
    ]
    assert tokens[-1].pos == PosTag.NOUN
    assert [t.position for t in tokens] == list(range(7))


def test_recognize_entities_without_gazetteer(resources):
    tokens = ta.tag_pos(ta.tokenize('Karim lives in Rajkot'), resources.lexicon)
    tokens = ta.recognize_entities(tokens, {})
    assert [t.entity for t in tokens] == [EntityTag.PERSON, EntityTag.NONE, EntityTag.NONE, EntityTag.LOCATION]


def test_recognize_entities_lowercase_nouns_have_none(resources):
    tokens = ta.analyse_sentence(RawSentence('Popeye eats spinach'), resources)
    assert [t.entity for t in tokens] == [EntityTag.PERSON, EntityTag.NONE, EntityTag.NONE]


def test_analyse_document(resources):
    import data as Data
    analysed = Data.analyse_document(VILLAGE, resources)
    assert [s.text for s, _ in analysed] == ['Rahim is the brother of Karim.', 'Karim lives in Porbandar.']
    assert [t.surface for t in analysed[1][1]] == ['Karim', 'lives', 'in', 'Porbandar']


def alphanumerics(text):
    return ''.join(c for c in text if c.isalnum())


def corpus_sentences():
    sentences = []
    for name in ('gandhi.txt', 'village.txt'):
        with open(os.path.join(utils.ROOT_DIR, 'corpus', name), encoding='utf-8') as f:
            sentences += ta.split_sentences(f.read())
    return sentences + [
        RawSentence('Mr. Karim was born on 2nd of May 1900, in Rajkot.'),
        RawSentence("In October 1869 Gandhiji's father lived in Porbandar-town."),
        RawSentence('Gandhiji studied law in London with Kasturba on 4th September 1888.'),
    ]


def test_tokens_conserve_sentence_content(resources):
    for sentence in corpus_sentences():
        raw = ta.tokenize(sentence)
        assert alphanumerics(''.join(t.surface for t in raw)) == alphanumerics(sentence.text)
        surfaces = [t.surface for t in raw]
        i = 0
        for t in ta.analyse_sentence(sentence, resources):
            if t.entity == EntityTag.DATE:
                length = ta.match_date(surfaces, i)
                assert length > 0
                assert t.surface == ta.normalize_date(surfaces[i:i + length])
                i += length
            else:
                assert t.surface == surfaces[i]
                i += 1
        assert i == len(surfaces)
