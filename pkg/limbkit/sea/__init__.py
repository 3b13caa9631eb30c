from limbkit.sea.plant import LoadBoundary, SeaPlant, SeaState, plant_energy
from limbkit.sea.sensor import SensorModel, measure_force
from limbkit.sea.controller import ForceController, ForceLoop
from limbkit.sea.simulation import (DivergenceBound, Trajectory, energy_drift_rate, simulate, sine_command,
                                    sine_motion, step, step_command, table_command)
from limbkit.sea.frequency import (FrequencyResponse, SweepSettings, analytic_bandwidth, closed_loop_force_response,
                                   closed_loop_impedance, closed_loop_poles, force_bandwidth, measure_impedance,
                                   measure_tracking, output_impedance)
from limbkit.sea.spring import SpringWindow, spring_window
