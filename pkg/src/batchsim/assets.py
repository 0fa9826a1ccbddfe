"""Robot-description parsing: a documented subset of URDF and MJCF.

Both loaders produce :class:`ArticulationTemplate` objects: an ordered tree
of links connected by 1-DOF joints (revolute/prismatic) or fixed joints.
Geometry is restricted to primitive shapes; mesh geometry and other
unsupported tags are skipped and recorded on ``template.warnings``.

The supported tag subset is documented in ``docs/formats.md``.
"""

from __future__ import annotations

import json
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

import numpy as np

from .errors import AssetParseError, SchemaError, TopologyError
from .pose import PoseBatch, quat_mul, quat_normalize, quat_rotate

SHAPE_KINDS = ("sphere", "box", "capsule", "cylinder", "plane")
JOINT_TYPES = ("revolute", "prismatic", "fixed")

DEFAULT_COLOR = (0.6, 0.6, 0.6, 1.0)


@dataclass(frozen=True)
class Frame:
    """A local pose: position (m) and scalar-first unit quaternion."""

    pos: tuple = (0.0, 0.0, 0.0)
    quat: tuple = (1.0, 0.0, 0.0, 0.0)

    @staticmethod
    def from_rpy(pos, rpy) -> "Frame":
        """URDF-style origin: extrinsic X-Y-Z (roll, pitch, yaw) Euler angles."""
        r, p, y = rpy
        cr, sr = math.cos(r / 2), math.sin(r / 2)
        cp, sp = math.cos(p / 2), math.sin(p / 2)
        cy, sy = math.cos(y / 2), math.sin(y / 2)
        q = (
            cr * cp * cy + sr * sp * sy,
            sr * cp * cy - cr * sp * sy,
            cr * sp * cy + sr * cp * sy,
            cr * cp * sy - sr * sp * cy,
        )
        return Frame(tuple(float(v) for v in pos), q)

    def to_pose(self) -> PoseBatch:
        return PoseBatch.from_pq(self.pos, self.quat)

    def compose(self, other: "Frame") -> "Frame":
        q = np.asarray(self.quat)
        p = np.asarray(self.pos) + quat_rotate(q, np.asarray(other.pos))
        qq = quat_normalize(quat_mul(q[None], np.asarray(other.quat)[None]))[0]
        return Frame(tuple(p.tolist()), tuple(qq.tolist()))


@dataclass(frozen=True)
class ShapeSpec:
    """Collision/visual primitive attached to a link or actor.

    size semantics: sphere (r,), box half-extents (hx, hy, hz),
    capsule/cylinder (r, half_length), plane ().
    """

    kind: str
    size: tuple
    frame: Frame = Frame()

    def __post_init__(self):
        if self.kind not in SHAPE_KINDS:
            raise SchemaError(f"unknown shape kind {self.kind!r}")
        if any(s <= 0 for s in self.size):
            raise SchemaError(f"{self.kind} dimensions must be positive, got {self.size}")


@dataclass(frozen=True)
class LinkSpec:
    name: str
    mass: float = 0.0
    inertia: tuple = ((0.0,) * 3,) * 3
    inertial_origin: Frame = Frame()
    collision_shapes: tuple = ()
    visual_color: tuple = DEFAULT_COLOR

    def inertia_matrix(self) -> np.ndarray:
        return np.asarray(self.inertia, dtype=np.float64)


@dataclass(frozen=True)
class JointSpec:
    name: str
    joint_type: str
    parent_link: int
    child_link: int
    axis: tuple = (0.0, 0.0, 1.0)
    origin: Frame = Frame()
    limits: tuple = (-math.inf, math.inf)
    damping: float = 0.0

    @property
    def is_movable(self) -> bool:
        return self.joint_type != "fixed"


@dataclass
class ArticulationTemplate:
    """Parsed kinematic tree in topological order (parent index < child index)."""

    name: str
    links: list = field(default_factory=list)
    joints: list = field(default_factory=list)
    root_link_index: int = 0
    warnings: list = field(default_factory=list)

    @property
    def dof(self) -> int:
        return sum(1 for j in self.joints if j.is_movable)

    @property
    def movable_joints(self) -> list:
        return [j for j in self.joints if j.is_movable]

    def link_index(self, name: str) -> int:
        for i, link in enumerate(self.links):
            if link.name == name:
                return i
        raise KeyError(f"no link named {name!r} in {self.name!r}")

    def joint_by_name(self, name: str) -> JointSpec:
        for j in self.joints:
            if j.name == name:
                return j
        raise KeyError(f"no joint named {name!r} in {self.name!r}")

    def parent_joint_of(self, link_index: int):
        for j in self.joints:
            if j.child_link == link_index:
                return j
        return None

    def validate(self) -> None:
        n = len(self.links)
        if n == 0:
            raise TopologyError(f"template {self.name!r} has no links")
        children = [j.child_link for j in self.joints]
        if len(set(children)) != len(children):
            raise TopologyError(f"template {self.name!r}: a link has two parent joints")
        if self.root_link_index in children:
            raise TopologyError(f"template {self.name!r}: root link has a parent joint")
        for j in self.joints:
            if not (0 <= j.parent_link < n and 0 <= j.child_link < n):
                raise SchemaError(f"joint {j.name!r} references missing link index")
            if j.parent_link >= j.child_link:
                raise TopologyError(
                    f"template {self.name!r} is not topologically ordered at joint {j.name!r}"
                )
            if j.limits[0] > j.limits[1]:
                raise SchemaError(f"joint {j.name!r} has lower limit > upper limit")
            if j.is_movable and abs(np.linalg.norm(j.axis) - 1.0) > 1e-9:
                raise SchemaError(f"joint {j.name!r} axis is not unit-norm")
        if len(set(children)) != n - 1:
            raise TopologyError(
                f"template {self.name!r}: links and joints do not form a single tree"
            )
        for link in self.links:
            if link.mass < 0:
                raise SchemaError(f"link {link.name!r} has negative mass")
            eig = np.linalg.eigvalsh(link.inertia_matrix())
            if eig.min() < -1e-12:
                raise SchemaError(f"link {link.name!r} inertia is not positive semidefinite")

    # -- canonical serialization (golden tests, layout hashing) ------------

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "root_link_index": self.root_link_index,
            "links": [
                {
                    "name": l.name,
                    "mass": l.mass,
                    "inertia": [list(row) for row in l.inertia],
                    "inertial_origin": {"pos": list(l.inertial_origin.pos), "quat": list(l.inertial_origin.quat)},
                    "collision_shapes": [
                        {
                            "kind": s.kind,
                            "size": list(s.size),
                            "pos": list(s.frame.pos),
                            "quat": list(s.frame.quat),
                        }
                        for s in l.collision_shapes
                    ],
                    "visual_color": list(l.visual_color),
                }
                for l in self.links
            ],
            "joints": [
                {
                    "name": j.name,
                    "type": j.joint_type,
                    "parent_link": j.parent_link,
                    "child_link": j.child_link,
                    "axis": list(j.axis),
                    "origin": {"pos": list(j.origin.pos), "quat": list(j.origin.quat)},
                    "limits": [_inf_to_json(j.limits[0]), _inf_to_json(j.limits[1])],
                    "damping": j.damping,
                }
                for j in self.joints
            ],
        }

    @staticmethod
    def from_dict(d: dict) -> "ArticulationTemplate":
        links = [
            LinkSpec(
                name=l["name"],
                mass=l["mass"],
                inertia=tuple(tuple(row) for row in l["inertia"]),
                inertial_origin=Frame(tuple(l["inertial_origin"]["pos"]), tuple(l["inertial_origin"]["quat"])),
                collision_shapes=tuple(
                    ShapeSpec(s["kind"], tuple(s["size"]), Frame(tuple(s["pos"]), tuple(s["quat"])))
                    for s in l["collision_shapes"]
                ),
                visual_color=tuple(l["visual_color"]),
            )
            for l in d["links"]
        ]
        joints = [
            JointSpec(
                name=j["name"],
                joint_type=j["type"],
                parent_link=j["parent_link"],
                child_link=j["child_link"],
                axis=tuple(j["axis"]),
                origin=Frame(tuple(j["origin"]["pos"]), tuple(j["origin"]["quat"])),
                limits=(_json_to_inf(j["limits"][0]), _json_to_inf(j["limits"][1])),
                damping=j["damping"],
            )
            for j in d["joints"]
        ]
        tpl = ArticulationTemplate(
            name=d["name"], links=links, joints=joints, root_link_index=d["root_link_index"]
        )
        tpl.validate()
        return tpl

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "ArticulationTemplate":
        return ArticulationTemplate.from_dict(json.loads(text))

    def __eq__(self, other) -> bool:
        return isinstance(other, ArticulationTemplate) and self.to_dict() == other.to_dict()


def _inf_to_json(v: float):
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return v


def _json_to_inf(v):
    if v == "inf":
        return math.inf
    if v == "-inf":
        return -math.inf
    return float(v)


# ---------------------------------------------------------------------------
# URDF
# ---------------------------------------------------------------------------

_URDF_SKIPPED_TAGS = {"transmission", "gazebo", "sensor", "material"}


def _parse_xml(xml_text: str) -> ET.Element:
    try:
        return ET.fromstring(xml_text)
    except ET.ParseError as exc:
        line, col = exc.position
        raise AssetParseError(f"malformed XML at line {line}, column {col}: {exc.msg}") from exc


def _floats(text: str, n: int, what: str) -> tuple:
    parts = text.split()
    if len(parts) != n:
        raise SchemaError(f"{what} expects {n} numbers, got {text!r}")
    return tuple(float(p) for p in parts)


def _parse_origin(elem) -> Frame:
    if elem is None:
        return Frame()
    xyz = _floats(elem.get("xyz", "0 0 0"), 3, "origin xyz")
    rpy = _floats(elem.get("rpy", "0 0 0"), 3, "origin rpy")
    return Frame.from_rpy(xyz, rpy)


def _parse_geometry(geom_elem, warnings: list, where: str):
    """Return a ShapeSpec for a URDF <geometry> child, or None if skipped."""
    kids = list(geom_elem)
    if not kids:
        raise SchemaError(f"empty <geometry> in {where}")
    g = kids[0]
    if g.tag == "sphere":
        r = float(_require(g, "radius", where))
        return "sphere", (r,)
    if g.tag == "box":
        size = _floats(_require(g, "size", where), 3, "box size")
        return "box", tuple(s / 2.0 for s in size)
    if g.tag == "cylinder":
        r = float(_require(g, "radius", where))
        length = float(_require(g, "length", where))
        return "cylinder", (r, length / 2.0)
    if g.tag == "capsule":
        r = float(_require(g, "radius", where))
        length = float(_require(g, "length", where))
        return "capsule", (r, length / 2.0)
    if g.tag == "mesh":
        warnings.append(f"skipped unsupported mesh geometry in {where}")
        return None
    raise SchemaError(f"unsupported geometry <{g.tag}> in {where}")


def _require(elem, attr: str, where: str) -> str:
    v = elem.get(attr)
    if v is None:
        raise SchemaError(f"<{elem.tag}> in {where} is missing required attribute {attr!r}")
    return v


def load_urdf(xml_text: str) -> ArticulationTemplate:
    """Parse a URDF string (documented subset) into an ArticulationTemplate."""
    root = _parse_xml(xml_text)
    if root.tag != "robot":
        raise SchemaError(f"expected <robot> root element, got <{root.tag}>")
    name = root.get("name", "robot")
    warnings: list = []

    raw_links = {}
    link_order = []
    for le in root.findall("link"):
        lname = _require(le, "name", "<link>")
        if lname in raw_links:
            raise SchemaError(f"duplicate link name {lname!r}")
        mass = 0.0
        inertia = ((0.0,) * 3,) * 3
        inertial_origin = Frame()
        ie = le.find("inertial")
        if ie is not None:
            me = ie.find("mass")
            mass = float(_require(me, "value", f"link {lname!r} inertial")) if me is not None else 0.0
            inertial_origin = _parse_origin(ie.find("origin"))
            tens = ie.find("inertia")
            if tens is not None:
                ixx = float(tens.get("ixx", "0"))
                iyy = float(tens.get("iyy", "0"))
                izz = float(tens.get("izz", "0"))
                ixy = float(tens.get("ixy", "0"))
                ixz = float(tens.get("ixz", "0"))
                iyz = float(tens.get("iyz", "0"))
                inertia = ((ixx, ixy, ixz), (ixy, iyy, iyz), (ixz, iyz, izz))
        shapes = []
        for ce in le.findall("collision"):
            ge = ce.find("geometry")
            if ge is None:
                raise SchemaError(f"<collision> in link {lname!r} has no <geometry>")
            parsed = _parse_geometry(ge, warnings, f"link {lname!r}")
            if parsed is not None:
                kind, size = parsed
                shapes.append(ShapeSpec(kind, size, _parse_origin(ce.find("origin"))))
        color = DEFAULT_COLOR
        ve = le.find("visual")
        if ve is not None:
            ce = ve.find("material/color")
            if ce is not None:
                color = _floats(_require(ce, "rgba", f"link {lname!r} material"), 4, "rgba")
        raw_links[lname] = LinkSpec(
            name=lname,
            mass=mass,
            inertia=inertia,
            inertial_origin=inertial_origin,
            collision_shapes=tuple(shapes),
            visual_color=color,
        )
        link_order.append(lname)
    if not raw_links:
        raise SchemaError("URDF declares no links")

    raw_joints = []
    for je in root.findall("joint"):
        jname = _require(je, "name", "<joint>")
        jtype = _require(je, "type", f"joint {jname!r}")
        if jtype == "continuous":
            jtype, limits = "revolute", (-math.inf, math.inf)
        elif jtype in ("revolute", "prismatic"):
            le_ = je.find("limit")
            if le_ is not None:
                limits = (float(le_.get("lower", "-inf")), float(le_.get("upper", "inf")))
            else:
                limits = (-math.inf, math.inf)
        elif jtype == "fixed":
            limits = (0.0, 0.0)
        else:
            raise SchemaError(f"unsupported joint type {jtype!r} on joint {jname!r}")
        pe = je.find("parent")
        che = je.find("child")
        if pe is None or che is None:
            raise SchemaError(f"joint {jname!r} must declare <parent> and <child>")
        parent = _require(pe, "link", f"joint {jname!r}")
        child = _require(che, "link", f"joint {jname!r}")
        for ref in (parent, child):
            if ref not in raw_links:
                raise SchemaError(f"joint {jname!r} references undeclared link {ref!r}")
        axis = (1.0, 0.0, 0.0)
        ae = je.find("axis")
        if ae is not None:
            axis = _floats(_require(ae, "xyz", f"joint {jname!r} axis"), 3, "axis xyz")
        de = je.find("dynamics")
        damping = float(de.get("damping", "0")) if de is not None else 0.0
        raw_joints.append(
            dict(
                name=jname,
                joint_type=jtype,
                parent=parent,
                child=child,
                axis=axis,
                origin=_parse_origin(je.find("origin")),
                limits=limits,
                damping=damping,
            )
        )

    for child in root:
        if child.tag in _URDF_SKIPPED_TAGS:
            warnings.append(f"skipped unsupported element <{child.tag}>")

    return _assemble(name, raw_links, link_order, raw_joints, warnings)


def _assemble(name, raw_links, link_order, raw_joints, warnings) -> ArticulationTemplate:
    """Order links topologically from the root and index the joints."""
    children_map: dict = {}
    child_names = set()
    for j in raw_joints:
        if j["child"] in child_names:
            raise TopologyError(f"link {j['child']!r} has more than one parent joint")
        child_names.add(j["child"])
        children_map.setdefault(j["parent"], []).append(j)
    roots = [n for n in link_order if n not in child_names]
    if len(roots) != 1:
        raise TopologyError(f"expected exactly one root link, found {roots}")

    ordered = []
    index_of = {}
    stack = [roots[0]]
    visited = set()
    joints_out = []
    while stack:
        lname = stack.pop(0)
        if lname in visited:
            raise TopologyError(f"kinematic loop detected at link {lname!r}")
        visited.add(lname)
        index_of[lname] = len(ordered)
        ordered.append(raw_links[lname])
        for j in children_map.get(lname, []):
            stack.append(j["child"])
    if len(ordered) != len(raw_links):
        unreachable = sorted(set(raw_links) - visited)
        raise TopologyError(f"links not connected to the root: {unreachable}")

    for j in raw_joints:
        axis = np.asarray(j["axis"], dtype=np.float64)
        norm = np.linalg.norm(axis)
        if j["joint_type"] != "fixed":
            if norm < 1e-12:
                raise SchemaError(f"joint {j['name']!r} has zero axis")
            axis = axis / norm
        joints_out.append(
            JointSpec(
                name=j["name"],
                joint_type=j["joint_type"],
                parent_link=index_of[j["parent"]],
                child_link=index_of[j["child"]],
                axis=tuple(axis.tolist()),
                origin=j["origin"],
                limits=j["limits"],
                damping=j["damping"],
            )
        )
    joints_out.sort(key=lambda js: js.child_link)
    tpl = ArticulationTemplate(
        name=name, links=ordered, joints=joints_out, root_link_index=0, warnings=warnings
    )
    tpl.validate()
    return tpl


# ---------------------------------------------------------------------------
# MJCF
# ---------------------------------------------------------------------------


class _MjcfDefaults:
    """Nested <default> class resolution for joint/geom attributes."""

    def __init__(self):
        self.classes = {"main": {"joint": {}, "geom": {}}}
        self.parents = {"main": None}

    def add(self, cls_name, parent, elem_kind, attrs):
        if cls_name not in self.classes:
            self.classes[cls_name] = {"joint": {}, "geom": {}}
            self.parents[cls_name] = parent
        self.classes[cls_name][elem_kind].update(attrs)

    def resolve(self, cls_name, elem_kind) -> dict:
        chain = []
        c = cls_name if cls_name in self.classes else "main"
        while c is not None:
            chain.append(c)
            c = self.parents.get(c)
        merged: dict = {}
        for c in reversed(chain):
            merged.update(self.classes[c][elem_kind])
        return merged


def _collect_defaults(elem, defaults: _MjcfDefaults, parent_cls: str):
    cls = elem.get("class", parent_cls if elem.tag == "default" else "main")
    if elem.tag == "default" and elem.get("class") is None:
        cls = parent_cls
    for child in elem:
        if child.tag == "default":
            child_cls = child.get("class")
            if child_cls is None:
                raise SchemaError("nested <default> requires a class attribute")
            defaults.add(child_cls, cls, "joint", {})
            _collect_defaults(child, defaults, child_cls)
        elif child.tag in ("joint", "geom"):
            defaults.add(cls, defaults.parents.get(cls), child.tag, dict(child.attrib))


def _mjcf_attr(elem, defaults: _MjcfDefaults, childclass: str, attr: str, fallback=None):
    v = elem.get(attr)
    if v is not None:
        return v
    cls = elem.get("class", childclass)
    return defaults.resolve(cls, elem.tag).get(attr, fallback)


def load_mjcf(xml_text: str) -> list:
    """Parse an MJCF string (documented subset): one template per root body."""
    root = _parse_xml(xml_text)
    if root.tag != "mujoco":
        raise SchemaError(f"expected <mujoco> root element, got <{root.tag}>")
    model_name = root.get("model", "mujoco")

    degrees = True  # MJCF default angle unit
    comp = root.find("compiler")
    if comp is not None:
        degrees = comp.get("angle", "degree") == "degree"

    defaults = _MjcfDefaults()
    for de in root.findall("default"):
        _collect_defaults(de, defaults, "main")

    worldbody = root.find("worldbody")
    if worldbody is None:
        raise SchemaError("MJCF has no <worldbody>")

    templates = []
    warnings: list = []
    for child in worldbody:
        if child.tag == "body":
            templates.append(
                _parse_mjcf_body_tree(child, model_name, defaults, degrees, warnings)
            )
        elif child.tag == "geom":
            warnings.append("skipped worldbody <geom> (static scene geometry is built via scene descriptors)")
        elif child.tag in ("light", "camera", "site"):
            warnings.append(f"skipped worldbody <{child.tag}>")
        else:
            raise SchemaError(f"unsupported worldbody element <{child.tag}>")
    if not templates:
        raise SchemaError("MJCF worldbody declares no bodies")
    for t in templates:
        t.warnings.extend(warnings)
    return templates


def _angle(v: float, degrees: bool) -> float:
    return math.radians(v) if degrees else v


def _mjcf_geom(ge, defaults, childclass, warnings, where):
    gtype = _mjcf_attr(ge, defaults, childclass, "type", "sphere")
    size_text = _mjcf_attr(ge, defaults, childclass, "size")
    if size_text is None:
        raise SchemaError(f"geom in {where} has no size (element or default class)")
    sizes = tuple(float(x) for x in str(size_text).split())
    pos = tuple(float(x) for x in str(_mjcf_attr(ge, defaults, childclass, "pos", "0 0 0")).split())
    quat = tuple(float(x) for x in str(_mjcf_attr(ge, defaults, childclass, "quat", "1 0 0 0")).split())
    rgba_text = _mjcf_attr(ge, defaults, childclass, "rgba")
    rgba = tuple(float(x) for x in str(rgba_text).split()) if rgba_text else None
    frame = Frame(pos, quat)
    if gtype == "sphere":
        return ShapeSpec("sphere", (sizes[0],), frame), rgba
    if gtype == "box":
        if len(sizes) != 3:
            raise SchemaError(f"box geom in {where} needs 3 sizes")
        return ShapeSpec("box", sizes, frame), rgba
    if gtype == "capsule":
        if len(sizes) != 2:
            raise SchemaError(f"capsule geom in {where} needs 2 sizes (radius, half-length)")
        return ShapeSpec("capsule", sizes, frame), rgba
    if gtype == "cylinder":
        if len(sizes) != 2:
            raise SchemaError(f"cylinder geom in {where} needs 2 sizes (radius, half-length)")
        return ShapeSpec("cylinder", sizes, frame), rgba
    warnings.append(f"skipped unsupported geom type {gtype!r} in {where}")
    return None, rgba


def _parse_mjcf_body_tree(body_elem, model_name, defaults, degrees, warnings) -> ArticulationTemplate:
    raw_links: dict = {}
    link_order: list = []
    raw_joints: list = []
    counter = [0]

    def walk(elem, parent_name, childclass):
        bname = elem.get("name") or f"body_{counter[0]}"
        counter[0] += 1
        if bname in raw_links:
            raise SchemaError(f"duplicate body name {bname!r}")
        childclass = elem.get("childclass", childclass)

        body_pos = tuple(float(x) for x in elem.get("pos", "0 0 0").split())
        body_quat = tuple(float(x) for x in elem.get("quat", "1 0 0 0").split())
        body_frame = Frame(body_pos, body_quat)

        joints = [c for c in elem if c.tag == "joint"]
        if len(joints) > 1:
            raise SchemaError(f"body {bname!r}: at most one joint per body is supported")
        if any(c.tag == "freejoint" for c in elem):
            raise SchemaError(
                f"body {bname!r}: free joints are unsupported; build free rigid bodies as scene actors"
            )

        # Joint anchor offset relocates the link frame to the joint anchor;
        # all body-local entities are re-expressed relative to it.
        anchor = (0.0, 0.0, 0.0)
        jspec = None
        if joints:
            je = joints[0]
            jtype = _mjcf_attr(je, defaults, childclass, "type", "hinge")
            if jtype not in ("hinge", "slide"):
                raise SchemaError(f"unsupported joint type {jtype!r} in body {bname!r}")
            axis_text = _mjcf_attr(je, defaults, childclass, "axis", "0 0 1")
            axis = np.asarray([float(x) for x in str(axis_text).split()], dtype=np.float64)
            norm = np.linalg.norm(axis)
            if norm < 1e-12:
                raise SchemaError(f"joint in body {bname!r} has zero axis")
            axis = axis / norm
            anchor = tuple(float(x) for x in str(_mjcf_attr(je, defaults, childclass, "pos", "0 0 0")).split())
            range_text = _mjcf_attr(je, defaults, childclass, "range")
            if range_text is not None:
                lo, hi = (float(x) for x in str(range_text).split())
                if jtype == "hinge":
                    lo, hi = _angle(lo, degrees), _angle(hi, degrees)
                limits = (lo, hi)
            else:
                limits = (-math.inf, math.inf)
            damping = float(_mjcf_attr(je, defaults, childclass, "damping", "0"))
            jspec = dict(
                name=je.get("name") or f"{bname}_joint",
                joint_type="revolute" if jtype == "hinge" else "prismatic",
                axis=tuple(axis.tolist()),
                limits=limits,
                damping=damping,
            )

        neg_anchor = Frame(tuple(-a for a in anchor))

        mass = 0.0
        inertia = ((0.0,) * 3,) * 3
        inertial_origin = Frame()
        color = DEFAULT_COLOR
        shapes = []
        ie = elem.find("inertial")
        if ie is not None:
            mass = float(_require(ie, "mass", f"body {bname!r} inertial"))
            ipos = tuple(float(x) for x in ie.get("pos", "0 0 0").split())
            iquat = tuple(float(x) for x in ie.get("quat", "1 0 0 0").split())
            inertial_origin = neg_anchor.compose(Frame(ipos, iquat))
            diag = ie.get("diaginertia")
            if diag is not None:
                dxx, dyy, dzz = (float(x) for x in diag.split())
                inertia = ((dxx, 0.0, 0.0), (0.0, dyy, 0.0), (0.0, 0.0, dzz))
            else:
                full = ie.get("fullinertia")
                if full is not None:
                    ixx, iyy, izz, ixy, ixz, iyz = (float(x) for x in full.split())
                    inertia = ((ixx, ixy, ixz), (ixy, iyy, iyz), (ixz, iyz, izz))
        for ge in elem.findall("geom"):
            shp, rgba = _mjcf_geom(ge, defaults, childclass, warnings, f"body {bname!r}")
            if shp is not None:
                shapes.append(ShapeSpec(shp.kind, shp.size, neg_anchor.compose(shp.frame)))
            if rgba is not None:
                color = rgba
        if ie is None and shapes:
            # Density-based fallback: unit density over primitive volumes.
            mass, inertia, inertial_origin = _mass_from_geoms(shapes)

        raw_links[bname] = LinkSpec(
            name=bname,
            mass=mass,
            inertia=inertia,
            inertial_origin=inertial_origin,
            collision_shapes=tuple(shapes),
            visual_color=color,
        )
        link_order.append(bname)

        if parent_name is not None:
            origin = body_frame.compose(Frame(anchor))
            if jspec is None:
                raw_joints.append(
                    dict(
                        name=f"{bname}_weld",
                        joint_type="fixed",
                        parent=parent_name,
                        child=bname,
                        axis=(0.0, 0.0, 1.0),
                        origin=origin,
                        limits=(0.0, 0.0),
                        damping=0.0,
                    )
                )
            else:
                raw_joints.append(
                    dict(parent=parent_name, child=bname, origin=origin, **jspec)
                )
        elif jspec is not None:
            # Root body with a joint: articulation base moves relative to the world
            # attachment frame; keep it as the root link's child via a synthetic base.
            raw_links["__world_base"] = LinkSpec(name="__world_base")
            link_order.insert(0, "__world_base")
            raw_joints.append(
                dict(parent="__world_base", child=bname, origin=body_frame.compose(Frame(anchor)), **jspec)
            )

        for child in elem:
            if child.tag == "body":
                walk(child, bname, childclass)
            elif child.tag in ("joint", "geom", "inertial", "freejoint"):
                continue
            elif child.tag in ("site", "camera", "light"):
                warnings.append(f"skipped <{child.tag}> in body {bname!r}")
            else:
                raise SchemaError(f"unsupported element <{child.tag}> in body {bname!r}")

    walk(body_elem, None, "main")
    name = body_elem.get("name") or model_name
    return _assemble(name, raw_links, link_order, raw_joints, list(warnings))


def _mass_from_geoms(shapes) -> tuple:
    """Unit-density mass properties when <inertial> is omitted (fixture aid)."""
    total = 0.0
    com = np.zeros(3)
    parts = []
    for s in shapes:
        if s.kind == "sphere":
            r = s.size[0]
            m = 4.0 / 3.0 * math.pi * r**3
            i_diag = np.full(3, 0.4 * m * r * r)
        elif s.kind == "box":
            hx, hy, hz = s.size
            m = 8.0 * hx * hy * hz
            i_diag = m / 3.0 * np.array([hy * hy + hz * hz, hx * hx + hz * hz, hx * hx + hy * hy])
        elif s.kind in ("capsule", "cylinder"):
            r, hl = s.size
            m = math.pi * r * r * 2 * hl
            if s.kind == "capsule":
                m += 4.0 / 3.0 * math.pi * r**3
            ixy = m * (3 * r * r + 4 * hl * hl) / 12.0
            i_diag = np.array([ixy, ixy, 0.5 * m * r * r])
        else:
            continue
        parts.append((m, np.asarray(s.frame.pos), i_diag))
        total += m
        com += m * np.asarray(s.frame.pos)
    if total <= 0:
        return 0.0, ((0.0,) * 3,) * 3, Frame()
    com /= total
    inertia = np.zeros((3, 3))
    for m, p, i_diag in parts:
        d = p - com
        inertia += np.diag(i_diag) + m * (np.dot(d, d) * np.eye(3) - np.outer(d, d))
    return float(total), tuple(tuple(row) for row in inertia.tolist()), Frame(tuple(com.tolist()))
