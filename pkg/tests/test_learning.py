import os
import logging

import utils
import model as Model
from model.learning import LearningReport, learn_document, learn_documents
from model.network import Network
from model.persistence import save

from helpers import VILLAGE

CORPUS = os.path.join(utils.ROOT_DIR, 'corpus')


def test_learn_document_report(resources):
    net = Network()
    report = learn_document(net, VILLAGE, 'village.txt', resources)
    assert report == LearningReport(sentences=2, parsed=2, skipped=0, units=2)
    assert {e.source for e in net.knowledge.values()} == {'village.txt'}


def test_sentences_without_verb_are_skipped(resources, caplog):
    net = Network()
    with caplog.at_level(logging.WARNING, logger='base'):
        report = learn_document(net, 'Porbandar in India. Karim lives in Porbandar.', 'mixed.txt', resources)
    assert report.skipped == 1
    assert report.parsed == 1
    assert net.stats().knowledge_units == 1
    assert 'sentence skipped' in caplog.text


def test_learn_documents_uses_relative_paths(resources, monkeypatch):
    monkeypatch.chdir(utils.ROOT_DIR)
    net = Network()
    paths = [os.path.join(CORPUS, 'gandhi.txt'), os.path.join(CORPUS, 'village.txt')]
    report = learn_documents(net, paths, resources)
    assert report.units == 4
    assert [net.knowledge[k].source for k in sorted(net.knowledge)] == [
        'corpus/gandhi.txt', 'corpus/gandhi.txt', 'corpus/village.txt', 'corpus/village.txt']
    # Porbandar is shared by both documents
    assert len(net.knowledge_of(net.lookup('Porbandar'))) == 2


def test_same_file_name_in_two_folders(resources, tmp_path, monkeypatch):
    for folder in ('a', 'b'):
        (tmp_path / folder).mkdir()
        (tmp_path / folder / 'notes.txt').write_text(VILLAGE, encoding='utf-8')
    monkeypatch.chdir(tmp_path)
    net = Network()
    report = learn_documents(net, ['a/notes.txt', os.path.join('b', 'notes.txt')], resources)
    assert report.units == 4
    assert sorted({e.source for e in net.knowledge.values()}) == ['a/notes.txt', 'b/notes.txt']


def test_learning_twice_adds_nothing(resources):
    net = Network()
    learn_document(net, VILLAGE, 'village.txt', resources)
    before = net.stats()
    learn_document(net, VILLAGE, 'village.txt', resources)
    assert net.stats() == before


def test_report_accumulates():
    report = LearningReport(1, 1, 0, 2)
    report += LearningReport(2, 1, 1, 1)
    assert report == LearningReport(3, 2, 1, 3)


def test_create_network(gandhi_network, tmp_path):
    path = str(tmp_path / 'store.dcqa.json')
    assert Model.create_network(path) == Network()
    save(gandhi_network, path)
    assert Model.create_network(path) == gandhi_network
