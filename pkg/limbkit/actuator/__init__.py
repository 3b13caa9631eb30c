from limbkit.actuator.specs import MotorSpec, ScrewSpec
from limbkit.actuator.sizing import (SizingReport, check_feasibility, nut_load_force, retraction_time, screw_speed,
                                     screw_torque)
