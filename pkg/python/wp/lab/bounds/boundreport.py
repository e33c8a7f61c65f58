from dataclasses import dataclass, field


@dataclass
class BoundReport():
    """
    Value of a closed-form bound together with its inputs and the anchor of
    the formula it evaluates. Interval-valued bounds set `interval` and leave
    `value` empty.
    """

    name: str
    inputs: dict
    formula_id: str
    value: float = None
    interval: tuple = None
    fitted: bool = False                        # True when an input constant is a fitted stand-in
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        d = dict(name=self.name, inputs=dict(self.inputs), formula_id=self.formula_id, fitted=self.fitted)
        if self.value is not None:
            d['value'] = self.value
        if self.interval is not None:
            d['interval'] = list(self.interval)
        d.update(self.extra)
        return d
