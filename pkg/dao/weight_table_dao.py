import pandas as pd

WEIGHT_COLUMNS = ["sign", "orient", "quadrant", "strand_role", "filt2", "grad"]


class WeightTableDAO:
    def __init__(self, path: str):
        self.path = path

    def load_frame(self) -> pd.DataFrame:
        frame = pd.read_csv(self.path, sep="\t", comment="#", dtype=str)
        frame.columns = [c.strip() for c in frame.columns]
        return frame
