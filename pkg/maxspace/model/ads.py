from typing import List

from pydantic import BaseModel, PositiveInt, root_validator, validator

from ._types import ProblemKind


class Ad(BaseModel):
    """ One advertisement: size, per-copy value, frequency bounds and slot window """
    id: PositiveInt
    size: PositiveInt
    value: PositiveInt
    freq_min: PositiveInt
    freq_max: PositiveInt
    release: PositiveInt
    deadline: PositiveInt

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def check_bounds(cls, values):
        if values["freq_min"] > values["freq_max"]:
            raise ValueError(f"freq_min ({values['freq_min']}) > freq_max ({values['freq_max']})")
        if values["release"] > values["deadline"]:
            raise ValueError(f"release ({values['release']}) > deadline ({values['deadline']})")
        window = values["deadline"] - values["release"] + 1
        if window < values["freq_min"]:
            raise ValueError(
                f"window [{values['release']}, {values['deadline']}] holds {window} slots "
                f"but freq_min is {values['freq_min']}"
            )
        return values

    @classmethod
    def plain(cls, ad_id: int, size: int, frequency: int, slot_count: int) -> "Ad":
        """ MAXSPACE ad housed in the general form """
        return cls(
            id=ad_id, size=size, value=size, freq_min=frequency, freq_max=frequency,
            release=1, deadline=slot_count
        )

    @property
    def window(self) -> int:
        return self.deadline - self.release + 1

    def is_plain(self, slot_count: int) -> bool:
        """ Whether the ad has the MAXSPACE shape for K slots """
        return (
            self.freq_min == self.freq_max and self.value == self.size
            and self.release == 1 and self.deadline == slot_count
        )


class Instance(BaseModel):
    """ A full problem: ads to place in K slots of capacity L """
    kind: ProblemKind
    slot_count: PositiveInt
    capacity: PositiveInt
    ads: List[Ad]

    class Config:
        frozen = True

    @validator("ads")
    def contiguous_ids(cls, v):
        for pos, ad in enumerate(v, start=1):
            if ad.id != pos:
                raise ValueError(f"ad ids must be 1..n without gaps, found {ad.id} at position {pos}")
        return v

    @root_validator(skip_on_failure=True)
    def check_ads(cls, values):
        slot_count = values["slot_count"]
        for ad in values["ads"]:
            if ad.deadline > slot_count:
                raise ValueError(f"ad {ad.id}: deadline {ad.deadline} exceeds K={slot_count}")
            if values["kind"] == ProblemKind.maxspace and not ad.is_plain(slot_count):
                raise ValueError(
                    f"ad {ad.id}: MAXSPACE ads need freq_min = freq_max, value = size, "
                    f"release = 1 and deadline = K"
                )
        return values

    @property
    def n(self) -> int:
        return len(self.ads)

    def ad(self, ad_id: int) -> Ad:
        return self.ads[ad_id - 1]

    @property
    def effective_kind(self) -> ProblemKind:
        """ Problem family implied by the shape of the ads, whatever the declared kind """
        if all(ad.is_plain(self.slot_count) for ad in self.ads):
            return ProblemKind.maxspace
        return ProblemKind.rdwv

    def as_rdwv(self) -> "Instance":
        """ The same ads declared as a MAXSPACE-RDWV instance """
        return Instance(kind=ProblemKind.rdwv, slot_count=self.slot_count, capacity=self.capacity, ads=list(self.ads))

    def digest(self) -> str:
        """ md5 of the canonical text form """
        from maxspace.instances.codec import write_instance
        from maxspace.misc import md5_text

        return md5_text(write_instance(self))
