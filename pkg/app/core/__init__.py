# Logging and error-to-exit-code plumbing
