#!/usr/bin/env python3
"""Basic import tests for cayleyiso."""


def test_import_package():
    import cayleyiso

    assert hasattr(cayleyiso, "__version__")


def test_import_submodules():
    from cayleyiso import census, ci, groups, iso, mcayley, perm

    for module in (census, ci, groups, iso, mcayley, perm):
        assert module.__all__


def test_public_names_resolve():
    import cayleyiso

    for module in (cayleyiso.perm, cayleyiso.groups, cayleyiso.mcayley, cayleyiso.iso, cayleyiso.ci, cayleyiso.census):
        for name in module.__all__:
            assert getattr(module, name, None) is not None, f"{module.__name__}.{name}"


def test_import_handlers():
    from cayleyiso._mcp import ci_test_handler, group_info_handler

    assert callable(ci_test_handler)
    assert callable(group_info_handler)


def test_cli_entry_point():
    from cayleyiso._cli import main

    assert main is not None


# EOF
