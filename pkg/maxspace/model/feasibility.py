import enum

from .schedule import Schedule, recomputed_loads
from .validation_context import ValidationContext


class Violation(str, enum.Enum):
    """ Constraint families, in the order they are reported """
    overflow = "overflow"
    duplicate = "duplicate"
    window = "window"
    frequency = "frequency"


def check_feasible(s: Schedule) -> ValidationContext:
    """ Check every schedule constraint from the per-ad placement alone

    Violations are recorded family by family (overflow, duplicate, window,
    frequency), slots or ads ascending inside a family, so ``first_error`` is
    deterministic.
    """
    ctx = ValidationContext()
    capacity = s.capacity

    for j, load in enumerate(recomputed_loads(s)[1:], start=1):
        ctx.error_assertion(
            load <= capacity, msg=f"load {load} exceeds capacity {capacity}",
            item_name=Violation.overflow.value, location=f"slot {j}", data=load
        )

    for ad_id in range(1, s.n + 1):
        slots = s.placement[ad_id]
        ctx.error_assertion(
            len(set(slots)) == len(slots), msg=f"ad {ad_id} has two copies in one slot",
            item_name=Violation.duplicate.value, location=f"ad {ad_id}", data=slots
        )

    for ad_id in range(1, s.n + 1):
        outside = [j for j in s.placement[ad_id] if not s.release[ad_id] <= j <= s.deadline[ad_id]]
        ctx.error_assertion(
            not outside,
            msg=f"ad {ad_id} placed in {outside} outside [{s.release[ad_id]}, {s.deadline[ad_id]}]",
            item_name=Violation.window.value, location=f"ad {ad_id}", data=outside
        )

    for ad_id in range(1, s.n + 1):
        count = len(set(s.placement[ad_id]))
        ctx.error_assertion(
            count == 0 or s.freq_min[ad_id] <= count <= s.freq_max[ad_id],
            msg=f"ad {ad_id} has {count} copies, expected [{s.freq_min[ad_id]}, {s.freq_max[ad_id]}]",
            item_name=Violation.frequency.value, location=f"ad {ad_id}", data=count
        )

    # caches must agree with the placement
    ctx.error_assertion(
        s.loads == recomputed_loads(s), msg="cached loads differ from the placement",
        item_name="cache", location="loads"
    )
    return ctx
