class GlobalSettings:
    """
    Process-wide defaults shared by every module of the package.
    """
    _defaults = {'rnd_seed': 0, 'prune_threshold': 1e-300, 'deck_group_cap': 10_000,
                 'operator_size_cap': 20_000, 'default_tolerance': 1e-12}

    def __init__(self):
        self.reset()

    def reset(self) -> None:
        """
        Restore every setting to its default value.
        :return: None
        """
        self._rnd_seed = self._defaults['rnd_seed']
        self._prune_threshold = self._defaults['prune_threshold']
        self._deck_group_cap = self._defaults['deck_group_cap']
        self._operator_size_cap = self._defaults['operator_size_cap']
        self._default_tolerance = self._defaults['default_tolerance']

    @property
    def rnd_seed(self):
        return self._rnd_seed

    @rnd_seed.setter
    def rnd_seed(self, value):
        self._rnd_seed = value

    @property
    def prune_threshold(self):
        return self._prune_threshold

    @prune_threshold.setter
    def prune_threshold(self, value):
        if value < 0:
            raise ValueError(f'prune_threshold must be >= 0, but was given: {value}')
        self._prune_threshold = float(value)

    @property
    def deck_group_cap(self):
        return self._deck_group_cap

    @deck_group_cap.setter
    def deck_group_cap(self, value):
        if value < 1:
            raise ValueError(f'deck_group_cap must be >= 1, but was given: {value}')
        self._deck_group_cap = int(value)

    @property
    def operator_size_cap(self):
        return self._operator_size_cap

    @operator_size_cap.setter
    def operator_size_cap(self, value):
        if value < 1:
            raise ValueError(f'operator_size_cap must be >= 1, but was given: {value}')
        self._operator_size_cap = int(value)

    @property
    def default_tolerance(self):
        return self._default_tolerance

    @default_tolerance.setter
    def default_tolerance(self, value):
        if value <= 0:
            raise ValueError(f'default_tolerance must be > 0, but was given: {value}')
        self._default_tolerance = float(value)


settings = GlobalSettings()
