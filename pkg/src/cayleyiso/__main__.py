#!/usr/bin/env python3
"""Allow running as: python -m cayleyiso."""

from ._cli import main

main()
