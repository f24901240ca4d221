import atexit
import os
import shutil
import tempfile
from functools import lru_cache
from pathlib import Path
from tempfile import gettempdir

from pydantic import (
    BaseSettings,
    validator,
    DirectoryPath,
)


class MaxspaceSettings(BaseSettings):
    APP_DIR: Path = Path.home() / "mxs-data"
    TMP_DIR: DirectoryPath = Path(gettempdir())
    # worker cap for bench grids, parallel GRASP & oracle branches
    workers: int = 1
    time_limit: float = 600.0
    seed: int = 0

    class Config:
        env_prefix = "MXS_"

    @validator("workers")
    def positive_workers(cls, v):
        """ joblib accepts negative counts, we only allow explicit caps """
        if v < 1:
            raise ValueError("worker count must be >= 1")
        return v

    @validator("time_limit")
    def non_negative_limit(cls, v):
        if v < 0:
            raise ValueError("time limit cannot be negative")
        return v

    @property
    def instances_path(self) -> Path:
        """ Path to generated instances folder """
        return self.APP_DIR / "instances"

    @property
    def results_path(self) -> Path:
        """ Path to benchmark results folder """
        return self.APP_DIR / "results"

    def mkdtemp(self, auto_clean: bool = True) -> Path:
        tmp_loc = Path(tempfile.mkdtemp(prefix="mxs", dir=self.TMP_DIR))

        def clean_tmp(d):
            shutil.rmtree(d, ignore_errors=True)

        if auto_clean:
            # create an auto-clean action
            atexit.register(clean_tmp, d=tmp_loc)

        return tmp_loc


@lru_cache()
def get_settings() -> MaxspaceSettings:
    """ Build & return global settings """
    env_file = os.environ.get("MXS_ENV", None)

    if env_file:
        return MaxspaceSettings(
            _env_file=env_file, _env_file_encoding="utf-8"
        )
    return MaxspaceSettings()
