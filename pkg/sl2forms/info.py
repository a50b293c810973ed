__version__ = '0.1.0'

import os
from os.path import join as pjoin


REPO_ROOT = os.path.abspath(pjoin(os.path.dirname(__file__), ".."))
DEFAULT_CONFIG_PATH = os.getenv("SL2FORMS_CONFIG", pjoin(REPO_ROOT, "configs", "base_config.yaml"))
