from limbkit.stress.geometry import FrameGeometry, geometry_from_record
from limbkit.stress.members import (CASE_NAMES, LoadCase, MemberGeometry, Rectangle, SolidCircle, load_case_from_record,
                                    member_from_record)
from limbkit.stress.check import StressReport, evaluate_case, run_all_cases, to_frame, von_mises, worst_case
