# Copyright 2024 The noncommuting authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
# or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import sys

from enum import StrEnum


class ConsoleColor(StrEnum):
    """
    Console colors including the end tag.
    """

    GREEN = '\033[32m'
    RED = '\033[91m'
    YELLOW = '\033[33m'

    # Special tag to end colored text.
    END = '\033[0m'


def text_color(text: str, color: ConsoleColor) -> str:
    """
    Add color tags to string.
    """
    return f'{color}{text}{ConsoleColor.END.value}'


def colored_status(status: str, enabled: bool) -> str:
    """
    Color verification status for a terminal. Unknown statuses and
    non-terminal output are left untouched.
    """
    if not enabled:
        return status

    color: dict[str, ConsoleColor] = {
        'PASS': ConsoleColor.GREEN,
        'FAIL': ConsoleColor.RED,
        'DISCREPANCY': ConsoleColor.YELLOW
    }

    if status not in color:
        return status

    return text_color(text=status, color=color[status])


def progress(message: str, verbose: bool) -> None:
    """
    Print progress message to stderr, so stdout stays reproducible.
    """
    if verbose:
        print(message, file=sys.stderr, flush=True)
