from io import BytesIO
from pathlib import Path
from typing import TextIO

from numpy import where
from scipy.sparse import csr_matrix
from sklearn.datasets import dump_svmlight_file
from sklearn.datasets import load_svmlight_file

from perfl.core.errors import LibsvmFormatError
from perfl.data.dataset import Dataset


def load_text(text: str) -> tuple[csr_matrix, object]:
    """ sklearn's reader on in-memory text; indices on disk start at 1 """

    return load_svmlight_file(BytesIO(text.encode("utf-8")), zero_based=False)


def data_lines(text: str) -> list[tuple[int, str]]:
    """ (1-based line number, line) of every line that is not blank or a comment """

    return [(number, line) for number, line in enumerate(text.splitlines(), 1)
            if line.split("#", 1)[0].strip()]


def locate_error(lines: list[tuple[int, str]], e: ValueError) -> LibsvmFormatError:
    """ Re-reads line by line to find the one sklearn rejected """

    for number, line in lines:
        try:
            load_text(line + "\n")
        except ValueError as inner:
            return LibsvmFormatError(number, str(inner))

    return LibsvmFormatError(lines[-1][0], str(e))


def parse_libsvm(stream: TextIO) -> Dataset:
    """ "<label> <index>:<value> ..." lines; blanks and # comments are skipped,
    positive labels become +1 and every other label -1 """

    text = stream.read()
    lines = data_lines(text)

    if not lines:
        raise LibsvmFormatError(len(text.splitlines()), "no data rows")

    try:
        features, labels = load_text(text)
    except ValueError as e:
        raise locate_error(lines, e)

    # rows without any feature still need one column
    if features.shape[1] == 0:
        features = csr_matrix((features.shape[0], 1))

    return Dataset(features, where(labels > 0, 1.0, -1.0))


def read_libsvm(path: Path) -> Dataset:
    with open(path, "r", encoding="utf-8") as stream:
        return parse_libsvm(stream)


def serialize_libsvm(data: Dataset, stream: TextIO) -> None:
    buffer = BytesIO()
    dump_svmlight_file(data.features, data.labels, buffer, zero_based=False)

    stream.write(buffer.getvalue().decode("ascii"))
