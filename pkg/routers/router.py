import argparse
from dataclasses import dataclass, field
from typing import Callable, List, Tuple


# argparse 인자 정의 (add_argument 에 그대로 전달)
def arg(*flags: str, **kwargs) -> Tuple[tuple, dict]:
    return flags, kwargs


@dataclass
class Command:
    name: str
    handler: Callable[[argparse.Namespace], int]
    help: str
    arguments: List[Tuple[tuple, dict]] = field(default_factory=list)


class CommandRouter:
    """서브커맨드 묶음. main.py 에서 include_router 로 등록"""

    def __init__(self):
        self.commands: List[Command] = []

    def command(self, name: str, help: str = "", arguments: List[Tuple[tuple, dict]] = None):
        def decorator(func):
            self.commands.append(Command(name, func, help, list(arguments or [])))
            return func
        return decorator


class App:
    def __init__(self, prog: str, description: str):
        self.parser = argparse.ArgumentParser(prog=prog, description=description)
        self.parser.add_argument("-v", "--verbose", action="count", default=0,
                                 help="log to stderr (-v info, -vv debug)")
        self.subparsers = self.parser.add_subparsers(dest="command", required=True)

    def include_router(self, router: CommandRouter) -> None:
        for command in router.commands:
            sub = self.subparsers.add_parser(command.name, help=command.help, description=command.help)
            for flags, kwargs in command.arguments:
                sub.add_argument(*flags, **kwargs)
            sub.set_defaults(handler=command.handler)


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value
