# Pydantic records exchanged between the CLI and the services
