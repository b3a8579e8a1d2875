__all__ = ['game', 'logic', 'verify', 'test_cli', 'test_graph',
           'test_graphio', 'test_pattern', 'test_util']
