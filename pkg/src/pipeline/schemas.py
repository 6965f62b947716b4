# -*- coding: utf-8 -*-
"""
JSON 输入校验（pydantic）与领域对象之间的转换。
"""
import json
import pathlib
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..algebra.abelian import Element, FinAbGroup, Hom, Subgroup
from ..errors import DomainError
from ..lie.rootsys import build
from ..subgroups.datum import SubgroupDatum, complement


class GroupModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    factors: list[int] = Field(default_factory=list)


class SubgroupModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    gens: list[list[int]] = Field(default_factory=list)


class HomModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    matrix: list[list[int]] = Field(default_factory=list)


class DatumModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    v: Literal[1] = 1
    type: str
    rank: int = Field(ge=1)
    ell: int
    Iplus: list[int] = Field(default_factory=list)
    Iminus: list[int] = Field(default_factory=list)
    N: SubgroupModel = Field(default_factory=SubgroupModel)
    Gamma: GroupModel = Field(default_factory=GroupModel)
    sigma: list[list[int]] | None = None
    delta: HomModel = Field(default_factory=HomModel)


class FamilyModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    v: Literal[1] = 1
    data: list[DatumModel]


def read_json(path):
    return json.loads(pathlib.Path(path).read_text(encoding="utf-8"))


def datum_from_model(m):
    rs = build(m.type, m.rank)
    Gamma = FinAbGroup(tuple(m.Gamma.factors))
    dual_g = Gamma.dual()
    Iplus, Iminus = frozenset(m.Iplus), frozenset(m.Iminus)
    torus_c = FinAbGroup.torus(m.ell, len(complement(rs.n, Iplus | Iminus)))
    gens = [Element(torus_c, tuple(g)) for g in m.N.gens]
    N = Subgroup.generated(torus_c, gens)
    if m.sigma is None:
        sigma = (dual_g.identity(),) * rs.n
    else:
        sigma = tuple(Element(dual_g, tuple(c)) for c in m.sigma)
    matrix = m.delta.matrix
    if matrix and (len(matrix) != Gamma.rank or any(len(row) != len(gens) for row in matrix)):
        raise DomainError(f"delta matrix must be {Gamma.rank}x{len(gens)} (Gamma rank x number of N gens)")
    if matrix and gens and Gamma.rank:
        images = [tuple(row[i] for row in matrix) for i in range(len(gens))]
        delta = Hom.from_generator_images(N, dual_g, gens, images)
    else:
        delta = Hom.zero(N, dual_g)
    return SubgroupDatum(rs, m.ell, Iplus, Iminus, N, Gamma, sigma, delta)


def load_datum(obj):
    """dict (already parsed JSON) -> SubgroupDatum; pydantic errors propagate."""
    return datum_from_model(DatumModel.model_validate(obj))


def load_family(obj):
    if isinstance(obj, list):
        obj = {"v": 1, "data": obj}
    return [datum_from_model(m) for m in FamilyModel.model_validate(obj).data]
