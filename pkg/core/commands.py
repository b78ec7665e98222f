import os
import sys
import json
import logging
from dataclasses import dataclass

import numpy as np

import utils
import data as Data
import model as Model
from core.errors import ConfigError, CorruptStore, NoAnswer
from model.learning import learn_documents
from model.persistence import load, save
from model.qa import QAEngine
import results.outputs as out
import results.network_plot as plot

logger = logging.getLogger('base')


@dataclass(frozen=True)
class CliConfig:
    store_path: str
    paths: dict
    max_hops: int = utils.DEFAULT_MAX_HOPS
    trace: bool = False
    output_mode: str = 'plain'


def build_config(opt):
    """
    Validates the merged options (NoneDict) into a CliConfig
    """
    if not opt['path']['store']:
        raise ConfigError('no store path: pass --store or set {}'.format(utils.STORE_ENV))
    if opt['output'] not in ('plain', 'structured'):
        raise ConfigError('unknown output mode: {}'.format(opt['output']))
    try:
        max_hops = int(opt['qa']['max_hops'])
    except (TypeError, ValueError):
        raise ConfigError('max_hops must be an integer, got {!r}'.format(opt['qa']['max_hops'])) from None
    if not opt['path']['store'].endswith(utils.STORE_SUFFIX):
        logger.warning('store path [{:s}] does not end with {}'.format(opt['path']['store'], utils.STORE_SUFFIX))
    return CliConfig(
        store_path=opt['path']['store'],
        paths=opt['path'],
        max_hops=max_hops,
        trace=bool(opt['qa']['trace']),
        output_mode=opt['output'],
    )


def _jsonable(value):
    if isinstance(value, np.integer):
        return int(value)
    raise TypeError('not serializable: {!r}'.format(value))


def emit(config, text, record):
    if config.output_mode == 'structured':
        print(json.dumps(record, ensure_ascii=False, default=_jsonable))
    else:
        print(text)


def load_store(config):
    if not os.path.exists(config.store_path):
        raise FileNotFoundError('no store at {}'.format(config.store_path))
    return load(config.store_path)


def cmd_ingest(files, config):
    """
    Learning phase over every file, then one save of the store
    """
    resources = Data.load_resources(config.paths)
    net = Model.create_network(config.store_path)
    before = net.stats()
    report = learn_documents(net, files, resources)
    if report.parsed == 0:
        message = 'no parsable sentence in {}'.format(', '.join(files))
        logger.error(message)
        emit(config, message, {'command': 'ingest', 'status': 'empty', 'message': message})
        return utils.EXIT_EMPTY
    save(net, config.store_path)
    after = net.stats()
    added = {
        'words': after.words - before.words,
        'knowledge_units': after.knowledge_units - before.knowledge_units,
        'links': after.links - before.links,
    }
    emit(config,
         '{} words, {} knowledge units, {} links'.format(added['words'], added['knowledge_units'], added['links']),
         {'command': 'ingest', 'status': 'ok', 'added': added, 'totals': after._asdict(),
          'sentences': report.sentences, 'skipped': report.skipped})
    return utils.EXIT_OK


def answer_question(engine, question, config, trace=False):
    """
    Answers one question and prints it; shared by ask and repl
    """
    try:
        answer = engine.answer(question)
    except NoAnswer as e:
        message = 'no answer [{}]: {}'.format(e.stage, e)
        print(message, file=sys.stderr)
        if config.output_mode == 'structured':
            emit(config, message, {'command': 'ask', 'question': question, 'status': 'no_answer',
                                   'error': e.__class__.__name__, 'stage': e.stage, 'message': str(e)})
        return utils.EXIT_NO_ANSWER
    text = answer.text
    if trace:
        text = text + '\n\n' + out.trace_text(engine.net, answer.trace)
    emit(config, text, {
        'command': 'ask',
        'question': question,
        'status': 'answered',
        'answer': answer.text,
        'texts': list(answer.texts),
        'knowledge_ids': list(answer.knowledge_ids),
        'answer_word': answer.answer_word,
        'hops': answer.hops,
        'trace': answer.trace,
    })
    return utils.EXIT_OK


def _engine(config):
    return QAEngine(load_store(config), Data.load_resources(config.paths), max_hops=config.max_hops)


def cmd_ask(question, config):
    return answer_question(_engine(config), question, config, config.trace)


def cmd_repl(config, stdin=None):
    """
    Reads questions line by line against one loaded store. ':quit' leaves,
    ':trace on|off' toggles the derivation tables.
    """
    stdin = sys.stdin if stdin is None else stdin
    engine = _engine(config)
    trace = config.trace
    interactive = hasattr(stdin, 'isatty') and stdin.isatty()
    while True:
        if interactive:
            print('qas> ', end='', flush=True)
        line = stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line == ':quit':
            break
        if line.startswith(':trace'):
            setting = line.split()[1:]
            if setting in (['on'], ['off']):
                trace = setting == ['on']
            else:
                print('usage: :trace on|off', file=sys.stderr)
            continue
        answer_question(engine, line, config, trace)
    return utils.EXIT_OK


def cmd_inspect(config):
    net = load_store(config)
    tables = out.inspect_tables(net)
    text = '\n\n'.join('{}\n{}'.format(title, out.format_table(df)) for title, df in tables)
    record = {'command': 'inspect'}
    for title, df in tables:
        record[title.lower().replace(' ', '_')] = df.to_dict(orient='records')
    emit(config, text, record)
    return utils.EXIT_OK


def cmd_export_dot(config, output=None, png=None):
    net = load_store(config)
    source = plot.network_to_dot(net)
    if output is not None:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(source)
        logger.info('Graph written to [{:s}]'.format(output))
    if png is not None:
        plot.plot_network(net, png)
        logger.info('Network diagram written to [{:s}]'.format(png))
    stats = net.stats()
    if output is None:
        emit(config, source.rstrip('\n'), {'command': 'export-dot', 'nodes': stats.words,
                                          'edges': stats.links, 'dot': source})
    elif config.output_mode == 'structured':
        emit(config, '', {'command': 'export-dot', 'nodes': stats.words, 'edges': stats.links,
                          'out': output, 'png': png})
    return utils.EXIT_OK


def run(args, opt):
    """
    Dispatches a parsed command line and maps failures onto exit codes
    """
    try:
        config = build_config(opt)
        if args.command == 'ingest':
            return cmd_ingest(args.files, config)
        if args.command == 'ask':
            return cmd_ask(args.question, config)
        if args.command == 'repl':
            return cmd_repl(config)
        if args.command == 'inspect':
            return cmd_inspect(config)
        if args.command == 'export-dot':
            return cmd_export_dot(config, args.out, args.png)
        raise NotImplementedError(args.command)
    except (OSError, CorruptStore, ConfigError) as e:
        print('error: {}: {}'.format(e.__class__.__name__, e), file=sys.stderr)
        return utils.EXIT_IO
