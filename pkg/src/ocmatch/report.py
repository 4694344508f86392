"""Line-oriented run reports.

Every CLI subcommand prints one report: the command name, then scalar
fields as "key: value" lines in insertion order, then named blocks whose
items are indented two spaces, then a closing "end" line. The format
round-trips losslessly through from_text, which the determinism tests
rely on. Values are stored as strings; format_weight keeps numbers
stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError


@dataclass
class RunReport:
    command: str
    fields: list[tuple[str, str]] = field(default_factory=list)
    blocks: list[tuple[str, list[str]]] = field(default_factory=list)

    def add(self, key: str, value: object) -> None:
        self.fields.append((key, str(value)))

    def add_block(self, name: str, items: list[str]) -> None:
        self.blocks.append((name, list(items)))

    def get(self, key: str) -> str:
        for k, v in self.fields:
            if k == key:
                return v
        raise KeyError(key)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for key, value in self.fields:
            lines.append(f"{key}: {value}")
        for name, items in self.blocks:
            lines.append(f"{name}:")
            lines.extend(f"  {item}" for item in items)
        lines.append("end")
        return "\n".join(lines) + "\n"


def from_text(text: str) -> RunReport:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("command: "):
        raise InputError("report must start with a 'command:' line")
    report = RunReport(lines[0][len("command: "):])
    i = 1
    while i < len(lines):
        line = lines[i]
        if line == "end":
            if i != len(lines) - 1:
                raise InputError("content after the 'end' line")
            return report
        if line.startswith("  "):
            raise InputError(f"indented line outside a block: {line!r}")
        if line.endswith(":") and ": " not in line:
            name = line[:-1]
            items = []
            i += 1
            while i < len(lines) and lines[i].startswith("  "):
                items.append(lines[i][2:])
                i += 1
            report.add_block(name, items)
            continue
        if ": " not in line:
            raise InputError(f"malformed report line: {line!r}")
        key, value = line.split(": ", 1)
        report.add(key, value)
        i += 1
    raise InputError("report is missing its 'end' line")
