"""Structured quad meshes of a surface grid and their OBJ/CSV/JSON writers."""
from __future__ import annotations

import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .slope_surfaces import SurfaceSpec, evaluate

FORMS = ("direct", "product", "homothetic")
FORMATS = ("obj", "csv", "json")


@dataclass(eq=False, frozen=True)
class MeshGrid:
    """Vertices in u-major order: vertex ``(i, j)`` has index ``i * nv + j``."""

    nu: int
    nv: int
    u: np.ndarray         # (nu,)
    v: np.ndarray         # (nv,)
    vertices: np.ndarray  # (nu * nv, 3), columns t, a, b

    @property
    def faces(self) -> np.ndarray:
        """``(nu - 1) * (nv - 1)`` quads as 0-based vertex indices."""
        i, j = np.meshgrid(np.arange(self.nu - 1), np.arange(self.nv - 1), indexing="ij")
        k = (i * self.nv + j).ravel()
        return np.stack([k, k + self.nv, k + self.nv + 1, k + 1], axis=1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MeshGrid):
            return NotImplemented
        return (
            self.nu == other.nu
            and self.nv == other.nv
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.vertices, other.vertices)
        )

    def to_dict(self) -> dict:
        return {
            "nu": self.nu,
            "nv": self.nv,
            "u": self.u.tolist(),
            "v": self.v.tolist(),
            "vertices": self.vertices.tolist(),
            "faces": self.faces.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> MeshGrid:
        mesh = cls(
            nu=int(d["nu"]),
            nv=int(d["nv"]),
            u=np.asarray(d["u"], dtype=float),
            v=np.asarray(d["v"], dtype=float),
            vertices=np.asarray(d["vertices"], dtype=float).reshape(-1, 3),
        )
        if "faces" in d and not np.array_equal(np.asarray(d["faces"]), mesh.faces):
            raise ValueError("face list does not match the structured grid")
        return mesh


def build_mesh(spec: SurfaceSpec, form: str = "direct") -> MeshGrid:
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")
    us, vs = spec.grid_axes()
    uu, vv = spec.grid_points()
    out = evaluate(spec, uu, vv)
    pts = out[form]
    if form == "product":
        pts = pts[:, 1:]
    return MeshGrid(spec.nu, spec.nv, us, vs, np.ascontiguousarray(pts))


def _g(x: float) -> str:
    return "%.17g" % x


def to_obj(mesh: MeshGrid, header: str | None = None) -> str:
    buf = io.StringIO()
    if header:
        for line in header.splitlines():
            buf.write(f"# {line}\n")
    for t, a, b in mesh.vertices:
        buf.write(f"v {_g(t)} {_g(a)} {_g(b)}\n")
    for f in mesh.faces + 1:
        buf.write("f %d %d %d %d\n" % tuple(f))
    return buf.getvalue()


def to_csv(mesh: MeshGrid) -> str:
    buf = io.StringIO()
    buf.write("u,v,t,a,b\n")
    for idx, (t, a, b) in enumerate(mesh.vertices):
        i, j = divmod(idx, mesh.nv)
        buf.write(",".join(_g(x) for x in (mesh.u[i], mesh.v[j], t, a, b)) + "\n")
    return buf.getvalue()


def to_json(mesh: MeshGrid) -> str:
    # json emits shortest round-trip reprs, so parsing back is exact
    return json.dumps(mesh.to_dict()) + "\n"


def render(mesh: MeshGrid, fmt: str, header: str | None = None) -> str:
    if fmt == "obj":
        return to_obj(mesh, header)
    if fmt == "csv":
        return to_csv(mesh)
    if fmt == "json":
        return to_json(mesh)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def generate(spec: SurfaceSpec, form: str = "direct", fmt: str = "obj",
             out: str | Path | None = None, header: str | None = None) -> MeshGrid:
    """Build the mesh and write it to ``out`` when given."""
    mesh = build_mesh(spec, form)
    if out is not None:
        Path(out).write_text(render(mesh, fmt, header), encoding="utf-8")
    return mesh
