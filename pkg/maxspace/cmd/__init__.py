from .cli_lib import CLI, CommandTree, CMD, LIST_OF_COMMANDS, ExitCode
# Import modules to init commands in them
import maxspace.cmd.bench
import maxspace.cmd.generic
import maxspace.cmd.instances
import maxspace.cmd.solve
