"""Catalog, file loading, report runner and the ``arr`` command."""
from ..arrmat import load
from .catalog import CatalogEntry, catalog, names, resolve
from .main import main
from .report import CHECKS, SCHEMA, run_report

__all__ = ["CHECKS", "SCHEMA", "CatalogEntry", "catalog", "load", "main", "names", "resolve", "run_report"]
