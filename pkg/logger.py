import json
import logging
import os
import platform
import sys
import threading
import time
import traceback
from logging.handlers import RotatingFileHandler

import config

LOGGER_NAME = "GeneralizedInverses"
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
PLAIN_FORMAT = '[%(asctime)s] [%(levelname)s] [%(threadName)s] %(message)s'
DEBUG_FORMAT = '[%(asctime)s] [%(levelname)s] [%(threadName)s] [%(module)s:%(lineno)d] %(message)s'


class StructuredFormatter(logging.Formatter):
    """Plain text lines, or one JSON object per record when ``use_json`` is set.

    Fields passed as ``extra`` to :class:`Logger` methods end up in
    ``record.custom_fields`` and are merged into the JSON object.
    """

    def __init__(self, fmt=None, datefmt=DATE_FORMAT, use_json=False):
        super().__init__(fmt, datefmt)
        self.use_json = use_json

    def format(self, record):
        if not self.use_json:
            return super().format(record)
        entry = {
            'timestamp': self.formatTime(record, self.datefmt),
            'level': record.levelname,
            'message': record.getMessage(),
            'logger': record.name,
            'thread': record.threadName,
            'module': record.module,
            'line': record.lineno,
        }
        if record.exc_info:
            entry['exception'] = self.formatException(record.exc_info)
        entry.update(getattr(record, 'custom_fields', {}))
        return json.dumps(entry, default=str, sort_keys=True)


def _memory_percent():
    try:
        import psutil
    except ImportError:
        return None
    return psutil.Process().memory_percent()


class Logger:
    def __init__(self, log_file=None, log_level=None, console=True):
        self.log_file = log_file or config.LOG_FILE
        self.log_level = log_level or config.LOG_LEVEL
        self.level = logging.getLevelName(str(self.log_level).upper())
        if not isinstance(self.level, int):
            self.level = logging.INFO
        self.use_json = config.LOG_JSON_FORMAT
        self.performance_tracking = config.PERFORMANCE_TRACKING
        self.performance_data = {}
        self._perf_lock = threading.Lock()

        log_dir = os.path.dirname(self.log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)

        self.logger = self._reset(logging.getLogger(LOGGER_NAME), self.level)
        self.logger.addHandler(self._file_handler())
        if console:
            self.logger.addHandler(self._console_handler())
        self.perf_logger = None
        if self.performance_tracking:
            self.perf_logger = self._reset(logging.getLogger(f"{LOGGER_NAME}.Performance"), logging.INFO)
            handler = logging.FileHandler(os.path.join(log_dir, 'performance.log'), encoding='utf-8')
            handler.setFormatter(StructuredFormatter('[%(asctime)s] [PERFORMANCE] %(message)s',
                                                     use_json=self.use_json))
            self.perf_logger.addHandler(handler)

        self._log_system_info()

    @staticmethod
    def _reset(logger, level):
        # a fresh Logger replaces the handlers of the previous one
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        logger.setLevel(level)
        logger.propagate = False
        return logger

    def _file_handler(self):
        if config.LOG_ROTATION:
            handler = RotatingFileHandler(self.log_file, maxBytes=config.MAX_LOG_SIZE_MB * 1024 * 1024,
                                          backupCount=config.LOG_BACKUP_COUNT, encoding='utf-8')
        else:
            handler = logging.FileHandler(self.log_file, encoding='utf-8')
        handler.setLevel(self.level)
        fmt = DEBUG_FORMAT if self.level <= logging.DEBUG else PLAIN_FORMAT
        handler.setFormatter(StructuredFormatter(fmt, use_json=self.use_json))
        return handler

    def _console_handler(self):
        # stdout carries command output only
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(max(self.level, logging.WARNING))
        handler.setFormatter(StructuredFormatter(PLAIN_FORMAT))
        return handler

    def _log_system_info(self):
        try:
            import psutil
            cpu_count = psutil.cpu_count()
        except ImportError:
            cpu_count = os.cpu_count()
        self.debug("Logger initialized", extra={
            "python_version": platform.python_version(),
            "platform": platform.platform(),
            "cpu_count": cpu_count,
            "memory_percent": _memory_percent(),
            "log_level": logging.getLevelName(self.level),
        })

    # -- performance tracking ---

    def start_performance_tracking(self, operation_name):
        if not self.performance_tracking:
            return None
        tracking_id = f"{operation_name}_{time.perf_counter_ns()}"
        with self._perf_lock:
            self.performance_data[tracking_id] = {"operation": operation_name,
                                                  "start": time.perf_counter(),
                                                  "checkpoints": []}
        return tracking_id

    def add_performance_checkpoint(self, tracking_id, checkpoint_name):
        with self._perf_lock:
            entry = self.performance_data.get(tracking_id)
            if entry is not None:
                entry["checkpoints"].append((checkpoint_name, time.perf_counter()))

    def end_performance_tracking(self, tracking_id, additional_info=None):
        with self._perf_lock:
            entry = self.performance_data.pop(tracking_id, None)
        if entry is None:
            return None
        total = time.perf_counter() - entry["start"]
        checkpoints = []
        previous = entry["start"]
        for name, stamp in entry["checkpoints"]:
            checkpoints.append({"name": name, "seconds": round(stamp - previous, 6)})
            previous = stamp
        record = {"operation": entry["operation"], "seconds": round(total, 6),
                  "checkpoints": checkpoints, "memory_percent": _memory_percent()}
        if additional_info:
            record.update(additional_info)
        target = self.perf_logger or self.logger
        target.info(f"{entry['operation']}: {json.dumps(record, default=str)}")
        return record

    # -- plain levels ---

    def debug(self, message, extra=None):
        self._log(message, logging.DEBUG, extra)

    def info(self, message, extra=None):
        self._log(message, logging.INFO, extra)

    def warning(self, message, extra=None):
        self._log(message, logging.WARNING, extra)

    def error(self, message, extra=None, exc_info=False):
        self._log(message, logging.ERROR, extra, exc_info)

    def critical(self, message, extra=None, exc_info=True):
        self._log(message, logging.CRITICAL, extra, exc_info)

    def _log(self, message, level, extra=None, exc_info=False):
        kwargs = {'extra': {'custom_fields': dict(extra)}} if extra else {}
        self.logger.log(level, message, exc_info=exc_info, **kwargs)

    # -- domain records ---

    def verification(self, report):
        verdict = "PASS" if report.passed else "FAIL"
        fields = {
            "theorem": report.theorem,
            "context": report.context,
            "strategy": report.strategy,
            "instances": report.instances_examined,
            "hypothesis_hits": report.hypothesis_count,
            "formula_checks": report.formula_checks,
            "failures": len(report.failures),
            "k_values": list(report.k_values),
            "exploratory": report.exploratory,
        }
        message = (f"VERIFY: {report.theorem} on {report.context}: {verdict} "
                   f"({report.hypothesis_count}/{report.instances_examined} instances in hypothesis, "
                   f"{len(report.failures)} failures)")
        (self.info if report.passed else self.warning)(message, extra=fields)

    def counterexample(self, report):
        failed = [name for name, held in report.assertions if not held]
        message = f"COUNTEREXAMPLE: {report.name}, {len(report.assertions)} assertions"
        if failed:
            message += f", failed: {', '.join(failed)}"
        self.info(message, extra={"counterexample": report.name,
                                  "assertions": dict(report.assertions)})

    def inverse(self, kind, present, dimension):
        outcome = "found" if present else "does not exist"
        self.info(f"INVERSE: {kind} of a {dimension}x{dimension} matrix: {outcome}",
                  extra={"kind": kind, "present": present, "dimension": dimension})

    def log_error_with_context(self, error, context=None, exc_info=True):
        error_type = type(error).__name__ if isinstance(error, BaseException) else "Unknown"
        error_message = str(error)
        cause = getattr(error, "__cause__", None)
        if cause is not None:
            error_message += f" | Caused by: {type(cause).__name__}: {cause}"
        fields = {"error_type": error_type, "error_message": error_message}
        for name in ("exit_code", "position", "axiom", "witness"):
            if getattr(error, name, None) is not None:
                fields[name] = getattr(error, name)
        if exc_info and isinstance(error, BaseException):
            fields["stack_trace"] = "".join(traceback.format_exception(type(error), error, error.__traceback__))
        if context:
            fields["context"] = context
        message = f"ERROR: {error_type}: {error_message}"
        if context:
            message += f" (context: {context})"
        self.error(message, extra=fields)
