import argparse
import platform
from importlib.metadata import version, PackageNotFoundError
from typing import Optional

import distro
from rich.table import Table

from maxspace.out import console as std_console
from .cli_lib import CMD, ExitCode, abort


class Version(CMD):
    """ Print the current version used """
    COMMAND = "version"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        """ """
        pass

    @staticmethod
    def get_package_version(pkg_name: str) -> Optional[str]:
        try:
            return version(pkg_name)
        except PackageNotFoundError:
            # package is not installed
            return None

    def run(self, argv: argparse.Namespace):
        mxs = self.get_package_version("maxspace-benchmarks")
        if mxs is None:
            abort("module maxspace-benchmarks not installed locally", ExitCode.usage)

        table = Table(show_header=False, header_style="bold magenta")
        table.add_column("Package")
        table.add_column("Version")
        table.add_row("maxspace-benchmarks", mxs, end_section=True)
        for dep in ("numpy", "pandas", "pydantic", "joblib"):
            dep_version = self.get_package_version(dep)
            if dep_version:
                table.add_row(dep, dep_version)
        table.add_row("python", platform.python_version(), end_section=True)

        if platform.system() == "Linux":
            os_name = f"{distro.name()} {distro.version()}"
        else:
            os_name = f"{platform.system()} {platform.release()}"
        table.add_row("os", os_name)
        std_console.print(table)
