# Copyright 2018 Canonical Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Collection of functions that did not fit anywhere else."""

import logging
import os
import time

import futurist
import jinja2
import yaml

import regions.coxeter.utilities.exceptions as regions_exceptions

DEFAULT_CONFIG_FILE = 'regions.yaml'

DEFAULT_GUARDS = {
    'max_group_order': 10 ** 7,
    'max_lattice_rank': 6,
    'max_lattice_hyperplanes': 70,
    'max_hyperplanes': 130,
    'max_chambers': 5 * 10 ** 6,
    'max_codes': 10 ** 6,
    'threads': 1,
}


def get_yaml_config(config_file):
    """Return configuration from YAML file.

    :param config_file: Configuration file name
    :type config_file: string
    :returns: Dictionary of configuration
    :rtype: dict
    """
    logging.info('Using config {}'.format(config_file))
    with open(config_file, 'r') as stream:
        return yaml.safe_load(stream.read()) or {}


def _check_guard_keys(values, origin):
    unknown = sorted(set(values) - set(DEFAULT_GUARDS))
    if unknown:
        raise regions_exceptions.InputError(
            "Unknown guard(s) in {}: {}".format(origin, ', '.join(unknown)))


def _as_count(name, value):
    try:
        count = int(value)
    except (TypeError, ValueError):
        raise regions_exceptions.InputError(
            "Guard {} must be an integer, got {!r}".format(name, value))
    if count < 0:
        raise regions_exceptions.InputError(
            "Guard {} must not be negative".format(name))
    return count


def get_guards(config_file=None, overrides=None):
    """Return the effective size guards.

    Defaults are overlaid by the ``guards`` mapping of the YAML config file,
    then by ``REGIONS_<NAME>`` environment variables, then by ``overrides``.
    ``regions.yaml`` in the working directory is read when present and no
    file is named.

    :param config_file: YAML file to read
    :type config_file: Optional[str]
    :param overrides: Explicit values, ``None`` values are ignored
    :type overrides: Optional[Dict[str, int]]
    :returns: Guard name to limit
    :rtype: Dict[str, int]
    :raises: regions_exceptions.InputError
    """
    guards = dict(DEFAULT_GUARDS)
    if config_file is None and os.path.exists(DEFAULT_CONFIG_FILE):
        config_file = DEFAULT_CONFIG_FILE
    if config_file is not None:
        config = get_yaml_config(config_file)
        from_file = config.get('guards') or {}
        _check_guard_keys(from_file, config_file)
        guards.update(from_file)
    for name in DEFAULT_GUARDS:
        key = 'REGIONS_{}'.format(name.upper())
        if key in os.environ:
            logging.warning("Guard {} taken from environment".format(name))
            guards[name] = os.environ[key]
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    _check_guard_keys(overrides, 'overrides')
    guards.update(overrides)
    return {name: _as_count(name, value) for name, value in guards.items()}


def guard_value(guards, name):
    """Return one guard, falling back to its default."""
    if guards and name in guards:
        return guards[name]
    return DEFAULT_GUARDS[name]


def get_executor(threads=1):
    """Return a futurist executor for ``threads`` workers.

    :param threads: Worker count; one or less runs everything inline
    :type threads: int
    :returns: Executor usable as a context manager
    :rtype: futurist.Executor
    """
    if threads is None or threads <= 1:
        return futurist.SynchronousExecutor()
    return futurist.ThreadPoolExecutor(max_workers=threads)


def chunked(items, size):
    """Split a sequence into consecutive lists of at most ``size`` items."""
    items = list(items)
    size = max(1, size)
    return [items[i:i + size] for i in range(0, len(items), size)]


def map_in_order(executor, function, chunks):
    """Apply ``function`` to each chunk and return results in chunk order.

    :param executor: Executor returned by :func:`get_executor`
    :type executor: futurist.Executor
    :param function: Callable applied to one chunk
    :type function: Callable
    :param chunks: Work items
    :type chunks: List
    :rtype: List
    """
    futures = [executor.submit(function, chunk) for chunk in chunks]
    return [future.result() for future in futures]


def clock_ns():
    """Return a monotonic clock reading in integer nanoseconds."""
    return time.perf_counter_ns()


def format_seconds(nanoseconds):
    """Render integer nanoseconds as seconds with three decimals."""
    millis = nanoseconds // 1000000
    return '{}.{:03d}'.format(millis // 1000, millis % 1000)


def render_template(template_name, ctxt, target_file=None):
    """Render a report template shipped with the package.

    :param template_name: Name of template file
    :type template_name: str
    :param ctxt: Context dictionary
    :type ctxt: dict
    :param target_file: Also write the result to this file
    :type target_file: Optional[str]
    :returns: Rendered text
    :rtype: str
    """
    jenv = jinja2.Environment(
        loader=jinja2.PackageLoader('regions.coxeter', 'templates'),
        keep_trailing_newline=True,
        trim_blocks=True,
        lstrip_blocks=True)
    template = jenv.get_template(template_name)
    text = template.render(ctxt)
    if target_file is not None:
        with open(target_file, 'w') as f:
            f.write(text)
    return text
