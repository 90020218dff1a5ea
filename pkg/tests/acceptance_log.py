# lines printed by the acceptance tests, shared with conftest
ACCEPTANCE_LINES: list[str] = []
