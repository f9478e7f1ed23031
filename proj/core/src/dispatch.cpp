// command dispatch: see json_io
