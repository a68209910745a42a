"""
Subcommand registry.

Every module under commands/ decorates its Command classes with @register;
discover_commands() imports them so cli.py never lists subcommands by hand.
"""

import importlib
import pkgutil
from typing import Dict, Type

from core.logging_config import get_logger

logger = get_logger("commands.registry")


class CommandRegistry:
    """Subcommand name -> Command class"""

    _commands: Dict[str, Type] = {}

    @classmethod
    def register(cls, command_class: Type) -> Type:
        """
        Class decorator adding a command under its `name`.

        Usage:
            @register
            class ReiffenCommand(Command):
                name = "reiffen"

        Raises:
            ValueError: If the class has no name
        """
        name = getattr(command_class, "name", None)
        if not name:
            raise ValueError(f"{command_class.__name__} has no subcommand name")

        existing = cls._commands.get(name)
        if existing is not None and existing is not command_class:
            logger.warning(f"Subcommand '{name}': {existing.__name__} replaced by {command_class.__name__}")

        cls._commands[name] = command_class
        logger.debug(f"Subcommand {name} -> {command_class.__name__}")
        return command_class

    @classmethod
    def get_command(cls, name: str) -> Type:
        """
        Raises:
            KeyError: For an unknown subcommand
        """
        try:
            return cls._commands[name]
        except KeyError:
            raise KeyError(f"Unknown subcommand '{name}'") from None

    @classmethod
    def get_all_commands(cls) -> Dict[str, Type]:
        """Registered commands in name order (the order of `dmod --help`)"""
        return {name: cls._commands[name] for name in sorted(cls._commands)}

    @classmethod
    def discover_commands(cls, package_name: str = "commands") -> None:
        """Import the plain modules of package_name; import failures are logged, not raised"""
        package = importlib.import_module(package_name)
        search_path = getattr(package, "__path__", None)
        if search_path is None:
            logger.warning(f"{package_name} is not a package; no subcommands discovered")
            return

        for info in pkgutil.iter_modules(search_path, f"{package.__name__}."):
            if info.ispkg:
                continue
            try:
                importlib.import_module(info.name)
            except Exception as e:
                logger.error(f"Skipping {info.name}: {e}")

        logger.debug(f"{len(cls._commands)} subcommands available")


register = CommandRegistry.register
