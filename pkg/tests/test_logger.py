import argparse
import logging

import utils
import core.logger as Logger


def namespace(**kwargs):
    return argparse.Namespace(**kwargs)


def test_defaults(monkeypatch):
    monkeypatch.delenv(utils.STORE_ENV, raising=False)
    opt = Logger.parse(namespace(config=None))
    assert opt['path']['store'] is None
    assert opt['path']['lexicon'] == utils.DEFAULT_LEXICON
    assert opt['qa']['max_hops'] == utils.DEFAULT_MAX_HOPS
    assert opt['output'] == 'plain'


def test_config_file_then_flags(tmp_path, monkeypatch):
    monkeypatch.setenv(utils.STORE_ENV, 'from_env.dcqa.json')
    config = tmp_path / 'qas.jsonc'
    config.write_text(
        '{\n'
        '    "path": {"store": "from_file.dcqa.json"}, // store\n'
        '    "qa": {"max_hops": 2, "trace": true}\n'
        '}\n', encoding='utf-8')
    opt = Logger.parse(namespace(config=str(config)))
    assert opt['path']['store'] == 'from_file.dcqa.json'
    assert opt['qa'] == {'max_hops': 2, 'trace': True}
    assert opt['path']['stopwords'] == utils.DEFAULT_STOPWORDS

    opt = Logger.parse(namespace(config=str(config), store='flag.dcqa.json', max_hops=4, output='structured'))
    assert opt['path']['store'] == 'flag.dcqa.json'
    assert opt['qa']['max_hops'] == 4
    assert opt['output'] == 'structured'


def test_store_falls_back_on_environment(monkeypatch):
    monkeypatch.setenv(utils.STORE_ENV, 'from_env.dcqa.json')
    assert Logger.parse(namespace(config=None))['path']['store'] == 'from_env.dcqa.json'


def test_nonedict():
    opt = Logger.dict_to_nonedict({'path': {'store': 'x'}, 'list': [{'a': 1}]})
    assert opt['missing'] is None
    assert opt['path']['log'] is None
    assert opt['list'][0]['b'] is None


def test_setup_logger_writes_file(tmp_path):
    logger = Logger.setup_logger('qas_test', str(tmp_path / 'logs'), 'run', level=logging.INFO, screen=False)
    logger.info('hello')
    for handler in logger.handlers:
        handler.flush()
    assert 'INFO: hello' in (tmp_path / 'logs' / 'run.log').read_text(encoding='utf-8')
    # setting up again replaces the handlers
    logger = Logger.setup_logger('qas_test', None, 'run', screen=True)
    assert len(logger.handlers) == 1


def test_dict2str():
    text = Logger.dict2str({'qa': {'max_hops': 3}, 'output': 'plain'})
    assert 'qa:[' in text
    assert 'max_hops: 3' in text
