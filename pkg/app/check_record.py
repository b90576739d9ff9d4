"""
CheckRecord class to represent the outcome of a single exact check.
"""

from typing import Optional

PASS = "PASS"
FAIL = "FAIL"


class CheckRecord:
    """Represents one evaluated equation at one location."""

    def __init__(self, check_id: str, location: str, status: str,
                 mismatch: Optional[str] = None):
        """
        Initialize a CheckRecord.

        Args:
            check_id: Name of the axiom or identity that was evaluated
            location: Where it was evaluated, usually a simple tuple
            status: PASS or FAIL
            mismatch: First differing matrix entry when the check failed
        """
        self.check_id = check_id
        self.location = location
        self.status = status
        self.mismatch = mismatch or ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __str__(self) -> str:
        """String representation of the record."""
        text = f"{self.status} {self.check_id} @ {self.location}"
        if self.mismatch:
            text += f": {self.mismatch}"
        return text

    def __repr__(self) -> str:
        """Detailed representation of the record."""
        return (f"CheckRecord(check_id='{self.check_id}', "
                f"location='{self.location}', status='{self.status}', "
                f"mismatch='{self.mismatch}')")

    def __eq__(self, other) -> bool:
        if not isinstance(other, CheckRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self) -> dict:
        """Convert record to dictionary."""
        return {
            'check_id': self.check_id,
            'location': self.location,
            'status': self.status,
            'mismatch': self.mismatch,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CheckRecord':
        """Create CheckRecord from dictionary."""
        mismatch = data.get('mismatch')
        if mismatch is None or mismatch != mismatch:  # NaN from an empty CSV cell
            mismatch = ""
        return cls(
            check_id=str(data['check_id']),
            location=str(data['location']),
            status=str(data['status']),
            mismatch=str(mismatch),
        )
