import logging
import data.load_data as ld
import data.text_analysis as ta
from .load_data import Resources

logger = logging.getLogger('base')


def load_resources(path_opt):
    """
    Loads lexicon, gazetteer, stopwords and interrogative table following path_opt (dict)
    """
    from model.deep_case import load_interrogatives, DEFAULT_INTERROGATIVES

    interrogatives = dict(DEFAULT_INTERROGATIVES)
    if path_opt["interrogatives"] is not None:
        interrogatives.update(load_interrogatives(path_opt["interrogatives"]))

    resources = Resources(
        lexicon=ld.load_lexicon(path_opt["lexicon"]),
        gazetteer=ld.load_gazetteer(path_opt["gazetteer"]),
        stopwords=ld.load_stopwords(path_opt["stopwords"]),
        interrogatives=interrogatives,
    )
    logger.info('Resources loaded: {} lexicon entries, {} gazetteer entries, {} stopwords'.format(
        len(resources.lexicon), len(resources.gazetteer), len(resources.stopwords)))
    return resources


def analyse_document(document_text, resources):
    """
    Runs sentence splitting, tokenization, POS tagging and entity recognition
    Input : document text, Resources
    Output: list of (RawSentence, list of Token)
    """
    return [(sentence, ta.analyse_sentence(sentence, resources))
            for sentence in ta.split_sentences(document_text)]
