class QasError(Exception):
    """Base class of every error raised by the question answering system."""


class ConfigError(QasError):
    pass


class UnparseableDate(QasError):
    pass


class NoVerbFound(QasError):
    pass


class EmptyUnit(QasError):
    pass


class CorruptStore(QasError):
    pass


# errors meaning "no answer for this question"
class NoAnswer(QasError):
    stage = "answer"


class UnknownInterrogative(NoAnswer):
    stage = "analyze_question"


class NoInterrogative(NoAnswer):
    stage = "analyze_question"


class NoContentWords(NoAnswer):
    stage = "analyze_question"


class UnknownWord(NoAnswer):
    stage = "search_direct"

    def __init__(self, word):
        super().__init__("unknown word: {}".format(word))
        self.word = word


class NoCaseMatch(NoAnswer):
    stage = "select_answer"


class NoPathFound(NoAnswer):
    stage = "answer_multi_hop"
