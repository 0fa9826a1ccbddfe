"""Robot description fixtures used by the built-in task suite.

All robots are primitive-shape approximations chosen to exercise the
engine (prismatic/revolute joints, fixed frames, contacts) while staying
analytically tractable for tests.
"""

PENDULUM_URDF = """<?xml version="1.0"?>
<robot name="pendulum">
  <link name="base"/>
  <link name="bob">
    <inertial>
      <origin xyz="0 0 -1.0"/>
      <mass value="1.0"/>
      <inertia ixx="0" ixy="0" ixz="0" iyy="0" iyz="0" izz="0"/>
    </inertial>
    <collision>
      <origin xyz="0 0 -1.0"/>
      <geometry><sphere radius="0.05"/></geometry>
    </collision>
  </link>
  <joint name="swing" type="continuous">
    <parent link="base"/>
    <child link="bob"/>
    <axis xyz="0 1 0"/>
  </joint>
</robot>
"""

# Long pendulum for energy-drift checks: lower natural frequency keeps the
# symplectic-Euler energy oscillation well under the 2% budget at 120 Hz.
LONG_PENDULUM_URDF = PENDULUM_URDF.replace('xyz="0 0 -1.0"', 'xyz="0 0 -2.0"')

PLANAR_2R_URDF = """<?xml version="1.0"?>
<robot name="planar_2r">
  <link name="base"/>
  <link name="upper">
    <inertial>
      <origin xyz="0.5 0 0"/>
      <mass value="1.0"/>
      <inertia ixx="0.001" ixy="0" ixz="0" iyy="0.084" iyz="0" izz="0.084"/>
    </inertial>
    <collision>
      <origin xyz="0.5 0 0" rpy="0 1.5707963267948966 0"/>
      <geometry><capsule radius="0.04" length="0.9"/></geometry>
    </collision>
  </link>
  <link name="fore">
    <inertial>
      <origin xyz="0.5 0 0"/>
      <mass value="1.0"/>
      <inertia ixx="0.001" ixy="0" ixz="0" iyy="0.084" iyz="0" izz="0.084"/>
    </inertial>
    <collision>
      <origin xyz="0.5 0 0" rpy="0 1.5707963267948966 0"/>
      <geometry><capsule radius="0.04" length="0.9"/></geometry>
    </collision>
  </link>
  <link name="tip"/>
  <joint name="shoulder" type="revolute">
    <parent link="base"/>
    <child link="upper"/>
    <axis xyz="0 0 1"/>
    <limit lower="-3.1415" upper="3.1415"/>
  </joint>
  <joint name="elbow" type="revolute">
    <origin xyz="1.0 0 0"/>
    <parent link="upper"/>
    <child link="fore"/>
    <axis xyz="0 0 1"/>
    <limit lower="-3.1415" upper="3.1415"/>
  </joint>
  <joint name="tip_weld" type="fixed">
    <origin xyz="1.0 0 0"/>
    <parent link="fore"/>
    <child link="tip"/>
  </joint>
</robot>
"""

# 3-DOF arm: base yaw about z, shoulder and elbow about y, links along +x at
# zero configuration, spherical end-effector frame 'ee' welded at the tip.
ARM3_URDF = """<?xml version="1.0"?>
<robot name="arm3">
  <link name="root"/>
  <link name="shoulder_link">
    <inertial>
      <mass value="0.5"/>
      <inertia ixx="0.002" ixy="0" ixz="0" iyy="0.002" iyz="0" izz="0.002"/>
    </inertial>
  </link>
  <link name="upper_arm">
    <inertial>
      <origin xyz="0.2 0 0"/>
      <mass value="0.8"/>
      <inertia ixx="0.001" ixy="0" ixz="0" iyy="0.012" iyz="0" izz="0.012"/>
    </inertial>
    <collision>
      <origin xyz="0.2 0 0" rpy="0 1.5707963267948966 0"/>
      <geometry><capsule radius="0.03" length="0.32"/></geometry>
    </collision>
  </link>
  <link name="forearm">
    <inertial>
      <origin xyz="0.2 0 0"/>
      <mass value="0.6"/>
      <inertia ixx="0.001" ixy="0" ixz="0" iyy="0.009" iyz="0" izz="0.009"/>
    </inertial>
    <collision>
      <origin xyz="0.2 0 0" rpy="0 1.5707963267948966 0"/>
      <geometry><capsule radius="0.03" length="0.32"/></geometry>
    </collision>
  </link>
  <link name="ee">
    <inertial>
      <mass value="0.1"/>
      <inertia ixx="0.0001" ixy="0" ixz="0" iyy="0.0001" iyz="0" izz="0.0001"/>
    </inertial>
    <collision>
      <geometry><sphere radius="0.03"/></geometry>
    </collision>
    <visual><material><color rgba="0.9 0.2 0.2 1"/></material></visual>
  </link>
  <joint name="yaw" type="revolute">
    <parent link="root"/>
    <child link="shoulder_link"/>
    <axis xyz="0 0 1"/>
    <limit lower="-3.1" upper="3.1"/>
    <dynamics damping="0.1"/>
  </joint>
  <joint name="shoulder" type="revolute">
    <parent link="shoulder_link"/>
    <child link="upper_arm"/>
    <axis xyz="0 1 0"/>
    <limit lower="-2.2" upper="2.2"/>
    <dynamics damping="0.1"/>
  </joint>
  <joint name="elbow" type="revolute">
    <origin xyz="0.4 0 0"/>
    <parent link="upper_arm"/>
    <child link="forearm"/>
    <axis xyz="0 1 0"/>
    <limit lower="-2.4" upper="2.4"/>
    <dynamics damping="0.1"/>
  </joint>
  <joint name="ee_weld" type="fixed">
    <origin xyz="0.4 0 0"/>
    <parent link="forearm"/>
    <child link="ee"/>
  </joint>
</robot>
"""

CARTPOLE_MJCF = """<?xml version="1.0"?>
<mujoco model="cartpole">
  <compiler angle="radian"/>
  <default>
    <joint damping="0.0"/>
    <default class="viz">
      <geom rgba="0.3 0.5 0.9 1"/>
    </default>
  </default>
  <worldbody>
    <body name="cart" pos="0 0 0.1">
      <joint name="slider" type="slide" axis="1 0 0" range="-1.8 1.8"/>
      <inertial pos="0 0 0" mass="1.0" diaginertia="0.004 0.004 0.004"/>
      <geom name="cart_geom" type="box" size="0.1 0.05 0.05" class="viz"/>
      <body name="pole" pos="0 0 0">
        <joint name="hinge" type="hinge" axis="0 1 0"/>
        <inertial pos="0 0 0.3" mass="0.1" diaginertia="0.003 0.003 0.00001"/>
        <geom name="pole_geom" type="capsule" size="0.02 0.3" pos="0 0 0.3" rgba="0.9 0.6 0.2 1"/>
      </body>
    </body>
  </worldbody>
</mujoco>
"""

# Planar gantry: two crossed prismatic joints carrying a spherical pusher tip.
PUSHER_XY_URDF = """<?xml version="1.0"?>
<robot name="pusher_xy">
  <link name="frame"/>
  <link name="carriage_x">
    <inertial>
      <mass value="0.5"/>
      <inertia ixx="0.001" ixy="0" ixz="0" iyy="0.001" iyz="0" izz="0.001"/>
    </inertial>
  </link>
  <link name="tip">
    <inertial>
      <mass value="0.3"/>
      <inertia ixx="0.0005" ixy="0" ixz="0" iyy="0.0005" iyz="0" izz="0.0005"/>
    </inertial>
    <collision>
      <geometry><sphere radius="0.03"/></geometry>
    </collision>
    <visual><material><color rgba="0.2 0.8 0.3 1"/></material></visual>
  </link>
  <joint name="slide_x" type="prismatic">
    <parent link="frame"/>
    <child link="carriage_x"/>
    <axis xyz="1 0 0"/>
    <limit lower="-0.6" upper="0.6"/>
    <dynamics damping="1.0"/>
  </joint>
  <joint name="slide_y" type="prismatic">
    <parent link="carriage_x"/>
    <child link="tip"/>
    <axis xyz="0 1 0"/>
    <limit lower="-0.6" upper="0.6"/>
    <dynamics damping="1.0"/>
  </joint>
</robot>
"""

# XYZ gantry holding a pen tip, for the drawing task.
PEN_XYZ_URDF = """<?xml version="1.0"?>
<robot name="pen_xyz">
  <link name="frame"/>
  <link name="carriage_x">
    <inertial>
      <mass value="0.4"/>
      <inertia ixx="0.001" ixy="0" ixz="0" iyy="0.001" iyz="0" izz="0.001"/>
    </inertial>
  </link>
  <link name="carriage_y">
    <inertial>
      <mass value="0.4"/>
      <inertia ixx="0.001" ixy="0" ixz="0" iyy="0.001" iyz="0" izz="0.001"/>
    </inertial>
  </link>
  <link name="pen_tip">
    <inertial>
      <mass value="0.2"/>
      <inertia ixx="0.0004" ixy="0" ixz="0" iyy="0.0004" iyz="0" izz="0.0004"/>
    </inertial>
    <visual><material><color rgba="0.1 0.1 0.1 1"/></material></visual>
  </link>
  <joint name="slide_x" type="prismatic">
    <parent link="frame"/>
    <child link="carriage_x"/>
    <axis xyz="1 0 0"/>
    <limit lower="-0.5" upper="0.5"/>
    <dynamics damping="1.0"/>
  </joint>
  <joint name="slide_y" type="prismatic">
    <parent link="carriage_x"/>
    <child link="carriage_y"/>
    <axis xyz="0 1 0"/>
    <limit lower="-0.5" upper="0.5"/>
    <dynamics damping="1.0"/>
  </joint>
  <joint name="slide_z" type="prismatic">
    <parent link="carriage_y"/>
    <child link="pen_tip"/>
    <axis xyz="0 0 1"/>
    <limit lower="0.0" upper="0.4"/>
    <dynamics damping="1.0"/>
  </joint>
</robot>
"""


def make_chain_urdf(dof: int, link_length: float = 0.3, name: str = "chain") -> str:
    """Serial revolute chain along +x with alternating z/y axes."""
    if dof < 1:
        raise ValueError("chain needs at least 1 DOF")
    parts = [f'<robot name="{name}{dof}">', '  <link name="base"/>']
    for i in range(dof):
        parts.append(
            f"""  <link name="link{i}">
    <inertial>
      <origin xyz="{link_length / 2} 0 0"/>
      <mass value="0.5"/>
      <inertia ixx="0.0005" ixy="0" ixz="0" iyy="0.004" iyz="0" izz="0.004"/>
    </inertial>
    <collision>
      <origin xyz="{link_length / 2} 0 0" rpy="0 1.5707963267948966 0"/>
      <geometry><capsule radius="0.02" length="{link_length * 0.9}"/></geometry>
    </collision>
  </link>"""
        )
        parent = "base" if i == 0 else f"link{i - 1}"
        origin = "0 0 0" if i == 0 else f"{link_length} 0 0"
        axis = "0 0 1" if i % 2 == 0 else "0 1 0"
        parts.append(
            f"""  <joint name="joint{i}" type="revolute">
    <origin xyz="{origin}"/>
    <parent link="{parent}"/>
    <child link="link{i}"/>
    <axis xyz="{axis}"/>
    <limit lower="-1.2" upper="1.2"/>
    <dynamics damping="0.05"/>
  </joint>"""
        )
    parts.append("</robot>")
    return "\n".join(parts)
