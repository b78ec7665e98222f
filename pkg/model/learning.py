import os
import logging
from dataclasses import dataclass

from tqdm import tqdm

import data as Data
import data.load_data as ld
from core.errors import NoVerbFound, EmptyUnit
from model.extraction import extract_units

logger = logging.getLogger('base')


@dataclass
class LearningReport:
    sentences: int = 0
    parsed: int = 0
    skipped: int = 0
    units: int = 0

    def __iadd__(self, other):
        self.sentences += other.sentences
        self.parsed += other.parsed
        self.skipped += other.skipped
        self.units += other.units
        return self


def learn_document(net, document_text, source, resources):
    """
    Learning phase for one document: every sentence is analysed, split into knowledge
    units and added to the network. Sentences that cannot be parsed are skipped with a
    warning.
    """
    report = LearningReport()
    for sentence, tokens in Data.analyse_document(document_text, resources):
        report.sentences += 1
        try:
            units = extract_units(tokens, resources.stopwords, sentence)
        except NoVerbFound as e:
            report.skipped += 1
            logger.warning('{}@{}: sentence skipped ({})'.format(source, sentence.document_offset, e))
            continue
        report.parsed += 1
        for draft, assignments in units:
            try:
                net.add_knowledge_unit(draft, assignments, source)
                report.units += 1
            except EmptyUnit as e:
                logger.warning('{}@{}: unit skipped ({})'.format(source, sentence.document_offset, e))
    logger.info('{}: {}'.format(source, report))
    return report


def document_id(path):
    return os.path.relpath(path).replace(os.sep, '/')


def learn_documents(net, paths, resources):
    """
    Learns every file in paths (plain UTF-8 text, one document per file). The file
    path, relative to the working directory and with '/' separators, is the
    document identifier.
    """
    report = LearningReport()
    for path in tqdm(paths, desc='Learning', unit='doc', disable=None):
        report += learn_document(net, ld.load_document(path), document_id(path), resources)
    return report
