from .bound import cmd_bound
from .code import cmd_code
from .simulate import cmd_simulate
from .verify import cmd_verify


COMMANDS = {
    "bound": cmd_bound,
    "code": cmd_code,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
}

__all__ = ["COMMANDS", "cmd_bound", "cmd_code", "cmd_simulate", "cmd_verify"]
