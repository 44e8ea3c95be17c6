"""Error types shared across the package.

InputError: the supplied data is malformed or fails validation.
PreconditionError: the data is fine but the requested computation's
mathematical precondition does not hold (wrong codimension, no
m-involution, skeleton not n-valent, ...).
"""

from __future__ import annotations


class InputError(ValueError):
    def __init__(self, messages: list[str] | str):
        if isinstance(messages, str):
            messages = [messages]
        self.messages = messages
        super().__init__("; ".join(messages))


class PreconditionError(ValueError):
    pass
