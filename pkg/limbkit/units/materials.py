"""
    Material property catalog.

    Properties are configuration data, loaded from a JSON catalog. The packaged catalog holds handbook values.
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Union

from limbkit.errors import ConfigError, InvalidQuantity, UnknownMaterial
from limbkit.units.quantities import Quantity, quantity

DEFAULT_CATALOG = Path(__file__).resolve().parent.parent / "data" / "materials.json"


@dataclass(frozen=True)
class MaterialProps:
    name: str
    youngs_modulus: Quantity
    yield_strength: Quantity
    density: Quantity

    def __post_init__(self):
        if self.youngs_modulus.m_as("Pa") <= 0:
            raise InvalidQuantity(f"{self.name}: youngs_modulus must be positive")
        if self.yield_strength.m_as("Pa") <= 0:
            raise InvalidQuantity(f"{self.name}: yield_strength must be positive")

    @classmethod
    def from_record(cls, record: dict) -> "MaterialProps":
        """
            Build from a catalog record.
        :param record: dict with name, youngs_modulus_pa, yield_strength_pa, density_kg_m3
        :return: MaterialProps
        """
        try:
            return cls(
                name=str(record["name"]),
                youngs_modulus=quantity(float(record["youngs_modulus_pa"]), "stress", "Pa"),
                yield_strength=quantity(float(record["yield_strength_pa"]), "stress", "Pa"),
                density=quantity(float(record["density_kg_m3"]), "density", "kg/m**3"),
            )
        except KeyError as e:
            raise ConfigError(f"material record is missing field {e}") from e

    def with_yield_strength(self, yield_strength: Quantity) -> "MaterialProps":
        return MaterialProps(self.name, self.youngs_modulus, quantity(yield_strength, "stress"), self.density)


class MaterialCatalog:
    """
        Materials by name.
    """
    materials: Dict[str, MaterialProps]

    def __init__(self, materials: Dict[str, MaterialProps], source: str = ""):
        self.materials = dict(materials)
        self.source = source

    @classmethod
    def from_file(cls, path: Optional[Union[str, Path]] = None) -> "MaterialCatalog":
        """
            Load a catalog file. Identical bytes give identical catalogs.
        :param path: Catalog path, the packaged catalog when None
        :return: MaterialCatalog
        """
        path = Path(path) if path is not None else DEFAULT_CATALOG

        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except FileNotFoundError as e:
            raise ConfigError(f"material catalog not found: {path}") from e
        except json.JSONDecodeError as e:
            raise ConfigError(f"material catalog {path} is not valid JSON: {e}") from e

        records = data["materials"] if isinstance(data, dict) else data
        materials = {}
        for record in records:
            props = MaterialProps.from_record(record)
            if props.name in materials:
                raise ConfigError(f"duplicate material {props.name!r} in {path}")
            materials[props.name] = props

        return cls(materials, str(path))

    def lookup(self, name: str) -> MaterialProps:
        if name not in self.materials:
            raise UnknownMaterial(name)

        return self.materials[name]

    def __contains__(self, name: str) -> bool:
        return name in self.materials

    def __len__(self) -> int:
        return len(self.materials)


_CATALOGS: Dict[str, MaterialCatalog] = {}


def load_catalog(path: Optional[Union[str, Path]] = None) -> MaterialCatalog:
    key = str(Path(path).resolve()) if path is not None else str(DEFAULT_CATALOG)

    if key not in _CATALOGS:
        _CATALOGS[key] = MaterialCatalog.from_file(path)

    return _CATALOGS[key]


def lookup_material(name: str, catalog: Optional[MaterialCatalog] = None) -> MaterialProps:
    """
        Find a material in the catalog.
    :param name: Material name, e.g. "al6061"
    :param catalog: Catalog to search, the packaged catalog when None
    :return: MaterialProps
    """
    return (catalog if catalog is not None else load_catalog()).lookup(name)
