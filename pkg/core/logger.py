import os
import json
from collections import OrderedDict
import logging

import utils


def default_options():
    opt = OrderedDict()
    opt['path'] = OrderedDict([
        ('store', None),
        ('lexicon', utils.DEFAULT_LEXICON),
        ('gazetteer', utils.DEFAULT_GAZETTEER),
        ('stopwords', utils.DEFAULT_STOPWORDS),
        ('interrogatives', utils.DEFAULT_INTERROGATIVES),
        ('log', None),
    ])
    opt['qa'] = OrderedDict([
        ('max_hops', utils.DEFAULT_MAX_HOPS),
        ('trace', False),
    ])
    opt['output'] = 'plain'
    opt['verbose'] = False
    return opt


def read_jsonc(opt_path):
    # remove comments starting with '//'
    json_str = ''
    with open(opt_path, 'r', encoding='utf-8') as f:
        for line in f:
            line = line.split('//')[0] + '\n'
            json_str += line
    return json.loads(json_str, object_pairs_hook=OrderedDict)


def _merge(base, update):
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def parse(args):
    """
    Builds the option tree: built-in defaults, then the JSONC file given with
    -c, then the command-line flags. The store path falls back on $DCQA_STORE.
    """
    opt = default_options()
    if getattr(args, 'config', None) is not None:
        _merge(opt, read_jsonc(args.config))

    flags = {
        ('path', 'store'): getattr(args, 'store', None),
        ('path', 'lexicon'): getattr(args, 'lexicon', None),
        ('path', 'gazetteer'): getattr(args, 'gazetteer', None),
        ('path', 'stopwords'): getattr(args, 'stopwords', None),
        ('path', 'interrogatives'): getattr(args, 'interrogatives', None),
        ('path', 'log'): getattr(args, 'log_dir', None),
        ('qa', 'max_hops'): getattr(args, 'max_hops', None),
    }
    for (section, key), value in flags.items():
        if value is not None:
            opt[section][key] = value
    if getattr(args, 'trace', False):
        opt['qa']['trace'] = True
    if getattr(args, 'output', None) is not None:
        opt['output'] = args.output
    if getattr(args, 'verbose', False):
        opt['verbose'] = True

    if opt['path']['store'] is None:
        opt['path']['store'] = os.environ.get(utils.STORE_ENV)
    return opt


class NoneDict(dict):
    def __missing__(self, key):
        return None


# convert to NoneDict, which return None for missing key.
def dict_to_nonedict(opt):
    if isinstance(opt, dict):
        new_opt = dict()
        for key, sub_opt in opt.items():
            new_opt[key] = dict_to_nonedict(sub_opt)
        return NoneDict(**new_opt)
    elif isinstance(opt, list):
        return [dict_to_nonedict(sub_opt) for sub_opt in opt]
    else:
        return opt


def setup_logger(logger_name, root, name, level=logging.INFO, screen=False, screen_level=logging.WARNING):
    '''set up logger'''
    l = logging.getLogger(logger_name)
    for handler in list(l.handlers):
        l.removeHandler(handler)
        handler.close()
    formatter = logging.Formatter(
        '%(asctime)s.%(msecs)03d - %(levelname)s: %(message)s', datefmt='%y-%m-%d %H:%M:%S')
    if root is not None:
        os.makedirs(root, exist_ok=True)
        log_file = os.path.join(root, '{}.log'.format(name))
        fh = logging.FileHandler(log_file, mode='a', encoding='utf-8')
        fh.setFormatter(formatter)
        l.addHandler(fh)
    l.setLevel(level)
    l.propagate = False
    if screen:
        sh = logging.StreamHandler()
        sh.setFormatter(formatter)
        sh.setLevel(screen_level)
        l.addHandler(sh)
    return l


def dict2str(opt, indent_l=1):
    '''dict to string for logger'''
    msg = ''
    for k, v in opt.items():
        if isinstance(v, dict):
            msg += ' ' * (indent_l * 2) + k + ':[\n'
            msg += dict2str(v, indent_l + 1)
            msg += ' ' * (indent_l * 2) + ']\n'
        else:
            msg += ' ' * (indent_l * 2) + k + ': ' + str(v) + '\n'
    return msg
