from .bad_event_family import BadEventFamilyBase, check_fit
from .run_observer import RunObserverBase
