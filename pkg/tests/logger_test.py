from loguru import logger

from betaproc.logger import Logger


def test_logger_writes_file(tmp_path):
    path = tmp_path / "run.log"
    run_logger = Logger(str(path))
    run_logger.log("hello from the test", "info")
    run_logger.log("unknown level falls back", "loud")
    run_logger.close()
    text = path.read_text()
    assert "INFO - hello from the test" in text
    assert "unknown level falls back" in text


def test_close_removes_sinks(tmp_path):
    path = tmp_path / "run.log"
    run_logger = Logger(str(path))
    run_logger.close()
    logger.info("after close")
    assert "after close" not in path.read_text()


def test_exception_records_reach_the_file(tmp_path):
    path = tmp_path / "library.log"
    run_logger = Logger(str(path))
    run_logger.log_exception("no active exception")
    run_logger.close()
    assert "no active exception" in path.read_text()


def test_verbose_echoes_to_stderr(capsys):
    run_logger = Logger(verbose=True)
    run_logger.log("shown on stderr", "warning")
    run_logger.close()
    assert "WARNING: shown on stderr" in capsys.readouterr().err
