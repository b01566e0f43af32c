# Copyright 2016, 2024 John J. Rofrano. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Package: socialrank
Social ranking solutions, multicameral voting games and an axiom laboratory.
This module builds the command line interface and sets up the logging
"""

import click

from socialrank import config
from socialrank.common import log_handlers


############################################################
# Initialize the command line interface
############################################################
def create_cli() -> click.Group:
    """Initialize the command line interface."""
    logger = log_handlers.init_logging("socialrank", config.LOGGING_LEVEL)

    # The commands pull in every module of the package
    # pylint: disable=import-outside-toplevel
    from socialrank.common.cli_commands import cli

    logger.debug(70 * "*")
    logger.debug("  S O C I A L   R A N K   R E A D Y  ".center(70, "*"))
    logger.debug(70 * "*")
    logger.debug("Command line initialized!")
    return cli
