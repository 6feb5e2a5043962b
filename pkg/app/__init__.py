# Command line and benchmark harness for the Fréchet engines
