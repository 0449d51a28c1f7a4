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

"""Module containing utilities for the regions-coxeter command line."""

import logging
import os
import sys


def parse_arg(options, arg, multiargs=False):
    """Resolve an option, letting an upper-cased env variable win.

    :param options: Parsed argparse options
    :type options: argparse.Namespace
    :param arg: Option attribute name, e.g. ``threads``
    :type arg: str
    :param multiargs: Split the environment value on whitespace
    :type multiargs: bool
    :returns: Option value
    :rtype: Union[str, List[str], None]
    """
    key = 'REGIONS_{}'.format(arg.upper())
    if key in os.environ:
        if multiargs:
            return os.environ[key].split()
        return os.environ[key]
    return getattr(options, arg, None)


def setup_logging(level='INFO'):
    """Do setup for logging.

    :param level: Root logger level name
    :type level: str
    :returns: Nothing: This function is executed for its side effect
    :rtype: None
    """
    logFormatter = logging.Formatter(
        fmt="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S")
    rootLogger = logging.getLogger()
    rootLogger.setLevel(level.upper())
    if not rootLogger.hasHandlers():
        consoleHandler = logging.StreamHandler(sys.stderr)
        consoleHandler.setFormatter(logFormatter)
        rootLogger.addHandler(consoleHandler)
