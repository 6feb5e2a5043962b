# Input loading and the benchmark harness
