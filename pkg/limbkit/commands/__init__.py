from limbkit.commands import bandwidth, gait, simulate, size, socket_map, spring_window, stress

COMMANDS = (size, simulate, bandwidth, gait, socket_map, stress, spring_window)
