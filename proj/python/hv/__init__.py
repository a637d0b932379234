# Copyright 2026 The hv Authors - All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Hidden-variable quantum mechanics on the state sphere."""

import json as _json

from ._hv import *  # noqa: F401,F403
from ._hv import list_experiments as _list_experiments
from ._hv import run_experiment as _run_experiment


def run(config, out):
    """Runs an experiment config (dict or JSON text) into directory `out`.

    Returns (exit_code, log, errors).
    """
    text = config if isinstance(config, str) else _json.dumps(config)
    return _run_experiment(text, str(out))


def kinds():
    """Names of the available experiment kinds."""
    return [k["kind"] for k in _json.loads(_list_experiments())["kinds"]]
