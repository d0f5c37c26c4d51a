"""Commands package: one module per CLI subcommand."""

from gftlab.commands import catalog, construct, member, plot, radii, verify

COMMANDS = {
    "radii": radii,
    "verify": verify,
    "member": member,
    "construct": construct,
    "catalog": catalog,
    "plot": plot,
}

__all__ = ["COMMANDS", "catalog", "construct", "member", "plot", "radii", "verify"]
