from limbkit.gait.profile import (DEFAULT_PHASES, GaitPhase, GaitProfile, LoadShape, build_profile, check_partition,
                                  gait_command, sample)
