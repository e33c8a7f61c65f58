import os
import tempfile


class AtomicWriter():
    """
    Context manager that writes a file next to its final location and renames
    it into place on success. On failure the temporary file is removed and the
    target is left untouched.
    """

    def __init__(self, path, mode='w', encoding='utf-8', newline='\n'):
        self.__path = path
        self.__mode = mode
        self.__encoding = encoding if 'b' not in mode else None
        self.__newline = newline if 'b' not in mode else None
        self.__tmp = None
        self.__file = None

    def __get_path(self):
        return self.__path

    path = property(__get_path)

    def __enter__(self):
        dir = os.path.dirname(os.path.abspath(self.__path))
        os.makedirs(dir, exist_ok=True)
        fd, self.__tmp = tempfile.mkstemp(prefix='.' + os.path.basename(self.__path) + '.', dir=dir)
        self.__file = os.fdopen(fd, self.__mode, encoding=self.__encoding, newline=self.__newline)
        return self.__file

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.__file.close()
        if exc_type is None:
            os.replace(self.__tmp, self.__path)
        elif os.path.exists(self.__tmp):
            os.remove(self.__tmp)
        self.__tmp = None
        self.__file = None
        return False
