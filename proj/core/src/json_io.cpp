// json input/output: implemented with the dispatch layer
